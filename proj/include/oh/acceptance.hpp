#pragma once

#include <string>
#include <vector>

namespace oh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Library-level acceptance suites 1..8 (randomized, seeded, exact).
CriterionResult run_criterion(int id, unsigned seed = 20261015);
std::vector<CriterionResult> run_library_criteria(unsigned seed = 20261015);

std::string format_result(const CriterionResult& r);

}  // namespace oh
