#pragma once

#include <string>
#include <vector>

#include "oh/poly.hpp"
#include "oh/rational.hpp"

namespace oh {

/// Euler's totient.
int euler_phi(int m);

/// The m-th cyclotomic polynomial, obtained by dividing y^m - 1 by Phi_d for
/// every proper divisor d of m.
Poly<Rational> cyclotomic_poly(int m);

/// An element of Q(zeta_m), stored in the power basis 1, zeta_m, ...,
/// zeta_m^(phi(m)-1). Conductor 2 is folded into conductor 1 (zeta_2 = -1).
/// Binary operations between different conductors lift both operands to the
/// least common multiple.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0L) {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& r) : m_(1), c_{r} {}  // NOLINT(google-explicit-constructor)

  /// zeta_m^k for the primitive root zeta_m = exp(2 pi i / m).
  static Cyclotomic zeta(int m, long k = 1);
  /// Element of conductor m from power-basis coefficients (any length; reduced).
  static Cyclotomic from_coeffs(int m, const std::vector<Rational>& coeffs);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_value() const;
  bool is_zero() const;

  /// Same element expressed in conductor L (m_ must divide L).
  Cyclotomic lifted(int L) const;
  /// Smallest equivalent conductor among divisors of the current one.
  Cyclotomic simplified() const;

  Cyclotomic inverse() const;

  /// Multiplicative order if this is a root of unity, otherwise 0.
  int root_of_unity_order() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Expression text in terms of zeta(m,j), parseable by the CLI grammar.
  std::string str() const;

 private:
  Cyclotomic(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static Cyclotomic reduce(int m, const Poly<Rational>& p);
  Poly<Rational> as_poly() const { return Poly<Rational>(c_); }

  int m_;
  std::vector<Rational> c_;  // length phi(m_)
};

inline bool is_zero(const Cyclotomic& z) { return z.is_zero(); }
ScalarText format_scalar(const Cyclotomic& z);
inline std::string to_string(const Cyclotomic& z) { return z.str(); }

}  // namespace oh
