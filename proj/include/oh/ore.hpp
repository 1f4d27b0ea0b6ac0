#pragma once

#include <map>
#include <set>
#include <string>

#include "oh/poly.hpp"

namespace oh {

/// Data attached to A_h = k[x][t; h d/dx]: the defining polynomial together
/// with N = deg h, psi = gcd(h, h'), q = h / psi and the exponent support of h.
template <Field K>
class AlgebraContext {
 public:
  explicit AlgebraContext(Poly<K> h) : h_(std::move(h)) {
    if (h_.is_zero()) throw DomainError("the defining polynomial h must be nonzero");
    psi_ = poly_gcd(h_, derivative(h_));
    q_ = exact_div(h_, psi_);
    support_ = support(h_);
  }

  const Poly<K>& h() const { return h_; }
  int N() const { return h_.degree(); }
  const Poly<K>& psi() const { return psi_; }
  const Poly<K>& q() const { return q_; }
  const std::set<int>& support_h() const { return support_; }
  bool square_free() const { return psi_.degree() == 0; }

  /// Monic with vanishing x^(N-1) coefficient and N >= 1: the form required
  /// by every automorphism-level operation.
  bool is_normalized() const {
    return N() >= 1 && h_.leading() == K(1) && is_zero(h_[N() - 1]);
  }

 private:
  Poly<K> h_, psi_, q_;
  std::set<int> support_;
};

/// Element sum_i f_i(x) t^i of A_h in normal form (coefficients on the left).
template <Field K>
class OreElement {
 public:
  using Terms = std::map<int, Poly<K>>;

  OreElement() = default;
  OreElement(const Poly<K>& f) { add_term(0, f); }  // NOLINT(google-explicit-constructor)
  explicit OreElement(Terms terms) {
    for (auto& [i, f] : terms) add_term(i, f);
  }
  static OreElement scalar(const K& c) { return OreElement(Poly<K>::constant(c)); }
  static OreElement x() { return OreElement(Poly<K>::x()); }
  static OreElement t_power(int i, const Poly<K>& coeff = Poly<K>::constant(K(1))) {
    OreElement e;
    e.add_term(i, coeff);
    return e;
  }
  static OreElement t() { return t_power(1); }

  void add_term(int tdeg, const Poly<K>& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(tdeg, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  Poly<K> coeff(int tdeg) const {
    auto it = terms_.find(tdeg);
    return it == terms_.end() ? Poly<K>{} : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  /// deg_t; kMinusInfinity for zero.
  int deg_t() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }
  /// Lies in k[x] (t-degree at most 0).
  bool in_polynomial_ring() const { return deg_t() <= 0; }

  OreElement& operator+=(const OreElement& o) {
    for (const auto& [i, f] : o.terms_) add_term(i, f);
    return *this;
  }
  OreElement& operator-=(const OreElement& o) {
    for (const auto& [i, f] : o.terms_) add_term(i, -f);
    return *this;
  }
  friend OreElement operator+(OreElement a, const OreElement& b) { return a += b; }
  friend OreElement operator-(OreElement a, const OreElement& b) { return a -= b; }
  friend OreElement operator-(const OreElement& a) {
    OreElement r;
    for (const auto& [i, f] : a.terms_) r.add_term(i, -f);
    return r;
  }
  /// Left multiplication by a polynomial in x (no reordering needed).
  friend OreElement operator*(const Poly<K>& f, const OreElement& u) {
    OreElement r;
    for (const auto& [i, g] : u.terms_) r.add_term(i, f * g);
    return r;
  }
  friend OreElement operator*(const K& c, const OreElement& u) { return Poly<K>::constant(c) * u; }

  /// Right multiplication by t^k (a shift in normal form).
  OreElement times_t_power(int k) const {
    OreElement r;
    for (const auto& [i, g] : terms_) r.terms_.emplace(i + k, g);
    return r;
  }

  friend bool operator==(const OreElement&, const OreElement&) = default;

 private:
  Terms terms_;
};

template <Field K>
int deg_t(const OreElement<K>& u) {
  return u.deg_t();
}

/// t * u, using t f = f t + f' h on each coefficient.
template <Field K>
OreElement<K> mul_t_left(const AlgebraContext<K>& ctx, const OreElement<K>& u) {
  OreElement<K> r;
  for (const auto& [i, f] : u.terms()) {
    r.add_term(i + 1, f);
    r.add_term(i, derivative(f) * ctx.h());
  }
  return r;
}

/// Normal-form product in A_h.
template <Field K>
OreElement<K> ore_mul(const AlgebraContext<K>& ctx, const OreElement<K>& u, const OreElement<K>& v) {
  OreElement<K> out;
  if (u.is_zero() || v.is_zero()) return out;
  const int top = u.deg_t();
  for (const auto& [j, g] : v.terms()) {
    // t^i g for i = 0, 1, ..., top.
    OreElement<K> tg(g);
    for (int i = 0; i <= top; ++i) {
      if (i > 0) tg = mul_t_left(ctx, tg);
      const Poly<K> f = u.coeff(i);
      if (f.is_zero()) continue;
      out += (f * tg).times_t_power(j);
    }
  }
  return out;
}

template <Field K>
OreElement<K> commutator(const AlgebraContext<K>& ctx, const OreElement<K>& u, const OreElement<K>& v) {
  return ore_mul(ctx, u, v) - ore_mul(ctx, v, u);
}

template <Field K>
OreElement<K> ore_pow(const AlgebraContext<K>& ctx, const OreElement<K>& u, int n) {
  if (n < 0) throw DomainError("ore_pow: exponent must be nonnegative");
  OreElement<K> result = OreElement<K>::scalar(K(1));
  OreElement<K> base = u;
  while (n > 0) {
    if (n & 1) result = ore_mul(ctx, result, base);
    n >>= 1;
    if (n) base = ore_mul(ctx, base, base);
  }
  return result;
}

/// Expanded monomial form, e.g. "x^2*t + 2*x^3".
template <Field K>
std::string to_string(const OreElement<K>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const int i = it->first;
    const Poly<K>& f = it->second;
    for (int j = f.degree(); j >= 0; --j) {
      if (is_zero(f[j])) continue;
      ScalarText st = format_scalar(f[j]);
      std::string mono;
      if (j > 0) mono = j == 1 ? "x" : "x^" + std::to_string(j);
      if (i > 0) {
        if (!mono.empty()) mono += "*";
        mono += i == 1 ? "t" : "t^" + std::to_string(i);
      }
      std::string coeff = st.atomic ? st.magnitude : "(" + st.magnitude + ")";
      std::string body;
      if (mono.empty())
        body = coeff;
      else if (st.atomic && st.magnitude == "1")
        body = mono;
      else
        body = coeff + "*" + mono;
      if (first)
        out = st.negative ? "-" + body : body;
      else
        out += (st.negative ? " - " : " + ") + body;
      first = false;
    }
  }
  return out;
}

}  // namespace oh
