#include "oh/unit.hpp"

namespace oh {

UnitConstraint::UnitConstraint(std::set<int> exponents) {
  for (int e : exponents) add(e);
}

void UnitConstraint::add(int exponent) {
  if (exponent < 0) exponent = -exponent;
  e_.insert(exponent);
}

void UnitConstraint::merge(const UnitConstraint& other) {
  for (int e : other.e_) e_.insert(e);
}

int UnitConstraint::order() const {
  int g = 0;
  for (int e : e_) g = std::gcd(g, e);
  return g;
}

bool UnitConstraint::admits(const Cyclotomic& a) const {
  if (a.is_zero()) return false;
  const int n = order();
  if (n == 0) return true;
  return power(a, n) == Cyclotomic(1L);
}

std::string group_name(int order) { return order == 0 ? "k*" : "G_" + std::to_string(order); }

}  // namespace oh
