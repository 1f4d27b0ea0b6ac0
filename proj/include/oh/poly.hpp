#pragma once

#include <algorithm>
#include <climits>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oh/scalar.hpp"

namespace oh {

/// Degree of the zero polynomial. Compares below every genuine degree.
inline constexpr int kMinusInfinity = INT_MIN;

namespace detail {
// Unqualified call so ADL finds is_zero overloads declared after this header.
template <typename K>
bool scalar_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field. Coefficients are indexed
/// by degree; the leading coefficient is never zero.
template <Field K>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }
  static Poly monomial(const K& c, int degree) {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, K(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(K(1), 1); }

  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i (zero outside the stored range).
  K operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : K(0);
  }
  const std::vector<K>& coeffs() const { return c_; }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const K& s, const Poly& p) {
    std::vector<K> r(p.c_.size(), K(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const K& s) { return s * p; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Multiplies by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<K> r(static_cast<std::size_t>(k), K(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  K operator()(const K& at) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  template <typename F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<R>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <Field K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

template <Field K>
Poly<K> derivative(const Poly<K>& f) {
  if (f.degree() < 1) return {};
  std::vector<K> r(static_cast<std::size_t>(f.degree()), K(0));
  for (int i = 1; i <= f.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = K(static_cast<long>(i)) * f[i];
  return Poly<K>(std::move(r));
}

/// Antiderivative with zero constant term.
template <Field K>
Poly<K> antiderivative(const Poly<K>& f) {
  if (f.is_zero()) return {};
  std::vector<K> r(static_cast<std::size_t>(f.degree()) + 2, K(0));
  for (int i = 0; i <= f.degree(); ++i) r[static_cast<std::size_t>(i + 1)] = f[i] / K(static_cast<long>(i + 1));
  return Poly<K>(std::move(r));
}

/// f(a x + b). Rejects a = 0.
template <Field K>
Poly<K> compose_affine(const Poly<K>& f, const K& a, const K& b) {
  if (is_zero(a)) throw DomainError("compose_affine: scale factor must be nonzero");
  const Poly<K> lin{b, a};
  Poly<K> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Poly<K>::constant(f[i]);
  return acc;
}

/// f(a x), cheaper than the general affine substitution.
template <Field K>
Poly<K> scale_argument(const Poly<K>& f, const K& a) {
  std::vector<K> r(f.coeffs().size(), K(0));
  K ap(1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.coeffs()[i] * ap;
    ap = ap * a;
  }
  return Poly<K>(std::move(r));
}

template <Field K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& num, const Poly<K>& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly<K>{}, num};
  std::vector<K> rem = num.coeffs();
  std::vector<K> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1, K(0));
  const K inv_lead = K(1) / den.leading();
  const int dd = den.degree();
  for (int i = num.degree(); i >= dd; --i) {
    const K c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - dd)] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] = rem[static_cast<std::size_t>(i - dd + j)] - c * den[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <Field K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

/// True if den divides num; the quotient is stored when requested.
template <Field K>
bool divides(const Poly<K>& den, const Poly<K>& num, Poly<K>* quotient = nullptr) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

template <Field K>
Poly<K> exact_div(const Poly<K>& num, const Poly<K>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

template <Field K>
Poly<K> monic(const Poly<K>& f) {
  if (f.is_zero()) return f;
  return (K(1) / f.leading()) * f;
}

/// Monic greatest common divisor. Rejects gcd(0, 0).
template <Field K>
Poly<K> poly_gcd(Poly<K> f, Poly<K> g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("poly_gcd: both arguments are zero");
  while (!g.is_zero()) {
    Poly<K> r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f);
}

/// Extended Euclid: returns (g, u, v) with u f + v g0 = g monic.
template <Field K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r0 = f, r1 = g, s0 = Poly<K>::constant(K(1)), s1, t0, t1 = Poly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = K(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Exponents with nonzero coefficient.
template <Field K>
std::set<int> support(const Poly<K>& f) {
  std::set<int> s;
  for (int i = 0; i <= f.degree(); ++i)
    if (!is_zero(f[i])) s.insert(i);
  return s;
}

template <Field K>
Poly<K> poly_pow(const Poly<K>& f, int n) {
  Poly<K> r = Poly<K>::constant(K(1));
  for (int i = 0; i < n; ++i) r *= f;
  return r;
}

/// Human-readable form, highest degree first, e.g. "2*x^3 - x + 1/2".
template <Field K>
std::string to_string(const Poly<K>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (is_zero(f[i])) continue;
    ScalarText st = format_scalar(f[i]);
    std::string mono;
    if (i > 0) mono = i == 1 ? var : var + "^" + std::to_string(i);
    std::string body;
    if (mono.empty()) {
      body = st.atomic ? st.magnitude : "(" + st.magnitude + ")";
    } else if (st.atomic && st.magnitude == "1") {
      body = mono;
    } else {
      body = (st.atomic ? st.magnitude : "(" + st.magnitude + ")") + "*" + mono;
    }
    if (first) {
      out = st.negative ? "-" + body : body;
    } else {
      out += st.negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace oh
