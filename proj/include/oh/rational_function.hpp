#pragma once

#include <string>

#include "oh/cyclotomic.hpp"
#include "oh/poly.hpp"
#include "oh/rational.hpp"

namespace oh {

/// Element of Q(a), the field of rational functions in the formal unit
/// parameter a. Kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(0L) {}
  RationalFunction(long v) : RationalFunction(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& r)  // NOLINT(google-explicit-constructor)
      : num_(Poly<Rational>::constant(r)), den_(Poly<Rational>::constant(Rational(1))) {}
  RationalFunction(Poly<Rational> num, Poly<Rational> den);

  /// The indeterminate a itself.
  static RationalFunction parameter();

  const Poly<Rational>& numerator() const { return num_; }
  const Poly<Rational>& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// True when the denominator is a power of a, i.e. the value is a Laurent
  /// polynomial and defined at every a != 0.
  bool is_laurent() const;

  Cyclotomic evaluate(const Cyclotomic& at) const;

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x) { return {-x.num_, x.den_}; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string str() const;

 private:
  Poly<Rational> num_, den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
ScalarText format_scalar(const RationalFunction& f);
inline std::string to_string(const RationalFunction& f) { return f.str(); }

/// Evaluates a polynomial with Q(a) coefficients at a concrete parameter value.
Poly<Cyclotomic> evaluate_at(const Poly<RationalFunction>& p, const Cyclotomic& a);

}  // namespace oh
