#include <iostream>

#include <nlohmann/json.hpp>

#include "oh/acceptance.hpp"
#include "oh/cli.hpp"

namespace {

struct Example {
  std::vector<std::string> args;
  std::string text;
};

oh::CriterionResult cli_examples() {
  const std::vector<Example> examples = {
      {{"--h", "x^2", "mul", "t", "x^2"}, "x^2*t + 2*x^3\n"},
      {{"--h", "x^2", "aut"}, "torsion=k*\n"},
      {{"--h", "x^2", "isotropy", "check", "--D", "deriv(w=-x, H=t, s=0)", "--rho", "sigma(x^2);tau(2)"},
       "member=true\n"},
  };
  int bad = 0;
  std::string detail;
  for (const auto& ex : examples) {
    const auto r = oh::run(ex.args);
    if (r.code != 0 || r.out != ex.text) {
      ++bad;
      detail += "; text mismatch: " + r.out + r.err;
    }
    auto jargs = ex.args;
    jargs.insert(jargs.begin(), "--json");
    const auto j = oh::run(jargs);
    try {
      const auto doc = nlohmann::json::parse(j.out);
      if (j.code != 0 || doc.at("ok") != true || !doc.at("diagnostics").is_array() || doc.at("result").is_null()) {
        ++bad;
        detail += "; bad json: " + j.out;
      }
    } catch (const std::exception& e) {
      ++bad;
      detail += std::string("; unparsable json: ") + e.what();
    }
  }
  const auto self = oh::run({"selftest"});
  if (self.code != 0) {
    ++bad;
    detail += "; selftest exit " + std::to_string(self.code);
  }
  return {9, "CLI examples", bad == 0, std::to_string(examples.size()) + " examples x 2 modes + selftest" + detail};
}

}  // namespace

int main() {
  bool all = true;
  for (const auto& r : oh::run_library_criteria()) {
    std::cout << oh::format_result(r) << "\n";
    all = all && r.pass;
  }
  const auto c9 = cli_examples();
  std::cout << oh::format_result(c9) << std::endl;
  return all && c9.pass ? 0 : 1;
}
