#pragma once

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <variant>

#include "oh/cyclotomic.hpp"
#include "oh/poly.hpp"

namespace oh {

/// A set E of nonnegative exponents meaning "a^e = 1 for every e in E".
/// The admissible parameters form the group G_n with n = gcd(E); n = 0
/// (empty or all-zero E) stands for every unit.
class UnitConstraint {
 public:
  UnitConstraint() = default;
  explicit UnitConstraint(std::set<int> exponents);

  void add(int exponent);
  void merge(const UnitConstraint& other);
  const std::set<int>& exponents() const { return e_; }

  /// gcd(E), with gcd of the empty set equal to 0.
  int order() const;
  bool all_units() const { return order() == 0; }
  /// Whether a concrete unit satisfies every a^e = 1.
  bool admits(const Cyclotomic& a) const;

  friend bool operator==(const UnitConstraint&, const UnitConstraint&) = default;

 private:
  std::set<int> e_;
};

inline int resolve_constraint(const UnitConstraint& c) { return c.order(); }

/// Text form of G_n ("k*" for n = 0).
std::string group_name(int order);

/// Formal unit parameter: marker for the symbolic a of tau_a.
struct SymbolicUnit {
  friend bool operator==(const SymbolicUnit&, const SymbolicUnit&) = default;
};

/// Either a concrete nonzero scalar or the formal indeterminate a.
using UnitParam = std::variant<Cyclotomic, SymbolicUnit>;

/// Finite sum  sum_e a^e * P_e(x)  with integer (possibly negative) exponents.
template <Field K>
class LaurentUnit {
 public:
  LaurentUnit() = default;
  LaurentUnit(int exponent, const Poly<K>& coeff) { add_term(exponent, coeff); }

  void add_term(int exponent, const Poly<K>& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<int, Poly<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentUnit& operator+=(const LaurentUnit& o) {
    for (const auto& [e, p] : o.terms_) add_term(e, p);
    return *this;
  }
  friend LaurentUnit operator+(LaurentUnit a, const LaurentUnit& b) { return a += b; }
  friend LaurentUnit operator-(const LaurentUnit& a) {
    LaurentUnit r;
    for (const auto& [e, p] : a.terms_) r.add_term(e, -p);
    return r;
  }
  friend LaurentUnit operator-(const LaurentUnit& a, const LaurentUnit& b) { return a + (-b); }
  friend LaurentUnit operator*(const LaurentUnit& a, const LaurentUnit& b) {
    LaurentUnit r;
    for (const auto& [e1, p1] : a.terms_)
      for (const auto& [e2, p2] : b.terms_) r.add_term(e1 + e2, p1 * p2);
    return r;
  }
  friend bool operator==(const LaurentUnit&, const LaurentUnit&) = default;

  /// Substitutes a concrete value for a.
  Poly<K> evaluate(const K& a) const {
    Poly<K> r;
    for (const auto& [e, p] : terms_) r += power(a, e) * p;
    return r;
  }

 private:
  std::map<int, Poly<K>> terms_;
};

}  // namespace oh
