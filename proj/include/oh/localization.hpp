#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "oh/ore.hpp"

namespace oh {

/// numerator / psi^k in R_S = k[x][psi^-1]. Reduced: psi does not divide the
/// numerator when k > 0, and zero is (0, 0).
template <Field K>
struct PsiFraction {
  Poly<K> num;
  int psi_pow = 0;

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return psi_pow == 0; }
  friend bool operator==(const PsiFraction&, const PsiFraction&) = default;
};

template <Field K>
PsiFraction<K> make_fraction(const AlgebraContext<K>& ctx, Poly<K> num, int psi_pow = 0) {
  if (psi_pow < 0) throw DomainError("negative psi exponent");
  if (num.is_zero()) return {};
  if (ctx.psi().degree() == 0) return {std::move(num), 0};  // psi = 1
  while (psi_pow > 0) {
    Poly<K> quo;
    if (!divides(ctx.psi(), num, &quo)) break;
    num = std::move(quo);
    --psi_pow;
  }
  return {std::move(num), psi_pow};
}

template <Field K>
PsiFraction<K> frac_neg(const PsiFraction<K>& a) {
  return {-a.num, a.psi_pow};
}

template <Field K>
PsiFraction<K> frac_add(const AlgebraContext<K>& ctx, const PsiFraction<K>& a, const PsiFraction<K>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int m = std::max(a.psi_pow, b.psi_pow);
  Poly<K> n = a.num * poly_pow(ctx.psi(), m - a.psi_pow) + b.num * poly_pow(ctx.psi(), m - b.psi_pow);
  return make_fraction(ctx, std::move(n), m);
}

template <Field K>
PsiFraction<K> frac_sub(const AlgebraContext<K>& ctx, const PsiFraction<K>& a, const PsiFraction<K>& b) {
  return frac_add(ctx, a, frac_neg(b));
}

template <Field K>
PsiFraction<K> frac_mul(const AlgebraContext<K>& ctx, const PsiFraction<K>& a, const PsiFraction<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return make_fraction(ctx, a.num * b.num, a.psi_pow + b.psi_pow);
}

/// The extension of d = h d/dx to R_S:
///   d_S(f / psi^k) = q (f' psi - k f psi') / psi^k   with h = psi q.
template <Field K>
PsiFraction<K> d_S(const AlgebraContext<K>& ctx, const PsiFraction<K>& u) {
  if (u.is_zero()) return {};
  if (u.psi_pow == 0) return make_fraction(ctx, derivative(u.num) * ctx.h());
  const Poly<K> top = derivative(u.num) * ctx.psi() - K(static_cast<long>(u.psi_pow)) * u.num * derivative(ctx.psi());
  return make_fraction(ctx, ctx.q() * top, u.psi_pow);
}

/// Divides a fraction by a nonzero polynomial g inside R_S. Returns nullopt
/// when the quotient has a denominator that is not a power of psi.
template <Field K>
std::optional<PsiFraction<K>> frac_div_poly(const AlgebraContext<K>& ctx, const PsiFraction<K>& a, const Poly<K>& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return PsiFraction<K>{};
  const int extra = ctx.psi().degree() == 0 ? 0 : g.degree();
  Poly<K> quo;
  if (!divides(g, a.num * poly_pow(ctx.psi(), extra), &quo)) return std::nullopt;
  return make_fraction(ctx, std::move(quo), a.psi_pow + extra);
}

/// Element of B = A_h[S^-1] = R_S[t; d_S]: every t-power carries its own
/// psi-fraction coefficient.
template <Field K>
class LocElement {
 public:
  using Terms = std::map<int, PsiFraction<K>>;

  LocElement() = default;
  explicit LocElement(const PsiFraction<K>& f) {
    if (!f.is_zero()) terms_.emplace(0, f);
  }
  /// Builds from already reduced coefficients; zero entries are dropped.
  static LocElement from_reduced(Terms terms) {
    LocElement r;
    for (auto& [i, f] : terms)
      if (!f.is_zero()) r.terms_.emplace(i, std::move(f));
    return r;
  }

  const Terms& terms() const { return terms_; }
  PsiFraction<K> coeff(int tdeg) const {
    auto it = terms_.find(tdeg);
    return it == terms_.end() ? PsiFraction<K>{} : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  int deg_t() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }

  /// Adds f t^i. Needs the context to renormalize the sum.
  void add_term(const AlgebraContext<K>& ctx, int tdeg, const PsiFraction<K>& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(tdeg, f);
    if (!inserted) {
      it->second = frac_add(ctx, it->second, f);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const LocElement&, const LocElement&) = default;

 private:
  Terms terms_;
};

template <Field K>
LocElement<K> embed(const OreElement<K>& u) {
  typename LocElement<K>::Terms terms;
  for (const auto& [i, f] : u.terms()) terms.emplace(i, PsiFraction<K>{f, 0});
  return LocElement<K>::from_reduced(std::move(terms));
}

/// Restriction to A_h: defined when no coefficient carries a psi power.
template <Field K>
std::optional<OreElement<K>> to_ore(const LocElement<K>& u) {
  OreElement<K> r;
  for (const auto& [i, f] : u.terms()) {
    if (f.psi_pow != 0) return std::nullopt;
    r.add_term(i, f.num);
  }
  return r;
}

template <Field K>
LocElement<K> loc_add(const AlgebraContext<K>& ctx, LocElement<K> a, const LocElement<K>& b) {
  for (const auto& [i, f] : b.terms()) a.add_term(ctx, i, f);
  return a;
}

template <Field K>
LocElement<K> loc_neg(const LocElement<K>& a) {
  typename LocElement<K>::Terms terms;
  for (const auto& [i, f] : a.terms()) terms.emplace(i, frac_neg(f));
  return LocElement<K>::from_reduced(std::move(terms));
}

template <Field K>
LocElement<K> loc_sub(const AlgebraContext<K>& ctx, const LocElement<K>& a, const LocElement<K>& b) {
  return loc_add(ctx, a, loc_neg(b));
}

/// Left multiplication by a fraction (no reordering needed).
template <Field K>
LocElement<K> loc_scale(const AlgebraContext<K>& ctx, const PsiFraction<K>& f, const LocElement<K>& u) {
  LocElement<K> r;
  for (const auto& [i, g] : u.terms()) r.add_term(ctx, i, frac_mul(ctx, f, g));
  return r;
}

template <Field K>
LocElement<K> loc_mul_t_left(const AlgebraContext<K>& ctx, const LocElement<K>& u) {
  LocElement<K> r;
  for (const auto& [i, f] : u.terms()) {
    r.add_term(ctx, i + 1, f);
    r.add_term(ctx, i, d_S(ctx, f));
  }
  return r;
}

/// Product in B, using t f = f t + d_S(f).
template <Field K>
LocElement<K> loc_mul(const AlgebraContext<K>& ctx, const LocElement<K>& u, const LocElement<K>& v) {
  LocElement<K> out;
  if (u.is_zero() || v.is_zero()) return out;
  const int top = u.deg_t();
  for (const auto& [j, g] : v.terms()) {
    LocElement<K> tg(g);
    for (int i = 0; i <= top; ++i) {
      if (i > 0) tg = loc_mul_t_left(ctx, tg);
      const PsiFraction<K> f = u.coeff(i);
      if (f.is_zero()) continue;
      for (const auto& [k, c] : tg.terms()) out.add_term(ctx, k + j, frac_mul(ctx, f, c));
    }
  }
  return out;
}

template <Field K>
LocElement<K> loc_commutator(const AlgebraContext<K>& ctx, const LocElement<K>& u, const LocElement<K>& v) {
  return loc_sub(ctx, loc_mul(ctx, u, v), loc_mul(ctx, v, u));
}

/// deg_t(u) <= 0, i.e. u lies in R_S.
template <Field K>
bool in_base_ring(const LocElement<K>& u) {
  return u.deg_t() <= 0;
}

/// d_S(u) = 0, which happens exactly for constants.
template <Field K>
bool is_constant_kernel(const AlgebraContext<K>& ctx, const PsiFraction<K>& u) {
  return d_S(ctx, u).is_zero();
}

/// H = h_n t^n + ... + h_1 t with deg h_i < deg psi (= N - #distinct roots).
template <Field K>
class SpecialPoly {
 public:
  SpecialPoly() = default;

  /// Validates against the context; throws DomainError when H is not special.
  static SpecialPoly from_element(const AlgebraContext<K>& ctx, const OreElement<K>& e) {
    SpecialPoly s;
    for (const auto& [i, f] : e.terms()) {
      if (i == 0) throw DomainError("special polynomial must not have a t^0 term");
      if (f.degree() >= ctx.psi().degree())
        throw DomainError("special polynomial coefficient of t^" + std::to_string(i) + " has degree " +
                          std::to_string(f.degree()) + ", bound is deg(psi) = " + std::to_string(ctx.psi().degree()));
    }
    s.h_ = e;
    return s;
  }

  const OreElement<K>& element() const { return h_; }
  bool is_zero() const { return h_.is_zero(); }
  friend bool operator==(const SpecialPoly&, const SpecialPoly&) = default;

 private:
  OreElement<K> h_;
};

/// w* = w + psi^-1 H.
template <Field K>
LocElement<K> w_star(const AlgebraContext<K>& ctx, const OreElement<K>& w, const SpecialPoly<K>& H) {
  LocElement<K> r = embed(w);
  for (const auto& [i, f] : H.element().terms()) r.add_term(ctx, i, make_fraction(ctx, f, 1));
  return r;
}

template <Field K>
struct CommutatorSplit {
  Poly<K> f;      // [u,-] = ad_f + Delta_{-r_rem}
  Poly<K> r_rem;
};

/// Splits d_S(u) = q h + r_rem (deg r_rem < deg h) and returns f with f' = q,
/// f(0) = 0. Throws NotStable when d_S(u) is not a polynomial.
template <Field K>
CommutatorSplit<K> commutator_decompose(const AlgebraContext<K>& ctx, const PsiFraction<K>& u) {
  const PsiFraction<K> d = d_S(ctx, u);
  if (!d.is_polynomial()) throw NotStable("d_S(u) is not a polynomial, so [u,-] does not preserve A_h");
  auto [quo, rem] = divmod(d.num, ctx.h());
  return {antiderivative(quo), rem};
}

template <Field K>
std::string to_string(const PsiFraction<K>& f) {
  if (f.psi_pow == 0) return to_string(f.num);
  const std::string p = f.num.degree() > 0 && support(f.num).size() > 1 ? "(" + to_string(f.num) + ")" : to_string(f.num);
  return p + "/psi" + (f.psi_pow == 1 ? "" : "^" + std::to_string(f.psi_pow));
}

template <Field K>
std::string to_string(const LocElement<K>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    const std::string c = to_string(it->second);
    const std::string tp = it->first == 0 ? "" : (it->first == 1 ? "t" : "t^" + std::to_string(it->first));
    if (tp.empty())
      out += c;
    else
      out += "(" + c + ")*" + tp;
  }
  return out;
}

}  // namespace oh
