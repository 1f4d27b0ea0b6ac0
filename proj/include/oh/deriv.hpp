#pragma once

#include <string>
#include <utility>

#include "oh/aut.hpp"

namespace oh {

/// Drops the constant term of the t^0 coefficient (ad_w = ad_{w+c}).
template <Field K>
OreElement<K> canonicalize_inner(const OreElement<K>& w) {
  const Poly<K> f0 = w.coeff(0);
  if (f0.is_zero() || is_zero(f0[0])) return w;
  return w - OreElement<K>(Poly<K>::constant(f0[0]));
}

/// D = ad_w + E_H + Delta_s.
template <Field K>
struct Derivation {
  OreElement<K> w;
  SpecialPoly<K> H;
  Poly<K> s;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Validated constructor: canonical w, special H, deg s < N.
template <Field K>
Derivation<K> make_derivation(const AlgebraContext<K>& ctx, const OreElement<K>& w, const OreElement<K>& H,
                              const Poly<K>& s) {
  if (!s.is_zero() && s.degree() >= ctx.N())
    throw DomainError("deg(s) = " + std::to_string(s.degree()) + " must be below deg(h) = " + std::to_string(ctx.N()));
  return {canonicalize_inner(w), SpecialPoly<K>::from_element(ctx, H), s};
}

template <Field K>
std::string to_string(const Derivation<K>& D) {
  return "deriv(w=" + to_string(D.w) + ", H=" + to_string(D.H.element()) + ", s=" + to_string(D.s) + ")";
}

/// Delta_s extended by Leibniz: Delta(x) = 0, Delta(t^i) = Delta(t^(i-1)) t + t^(i-1) s.
template <Field K>
OreElement<K> eval_delta(const AlgebraContext<K>& ctx, const Poly<K>& s, const OreElement<K>& u) {
  OreElement<K> out;
  if (s.is_zero() || u.is_zero()) return out;
  OreElement<K> d;  // Delta(t^i)
  OreElement<K> tprev = OreElement<K>::scalar(K(1));  // t^(i-1)
  const OreElement<K> S(s);
  for (int i = 1; i <= u.deg_t(); ++i) {
    d = d.times_t_power(1) + ore_mul(ctx, tprev, S);
    tprev = tprev.times_t_power(1);
    const Poly<K> f = u.coeff(i);
    if (!f.is_zero()) out += f * d;
  }
  return out;
}

/// E_H(u) = [psi^-1 H, u], computed in B and pulled back to A_h.
template <Field K>
OreElement<K> eval_special(const AlgebraContext<K>& ctx, const SpecialPoly<K>& H, const OreElement<K>& u) {
  if (H.is_zero()) return {};
  const LocElement<K> c = loc_commutator(ctx, w_star(ctx, OreElement<K>{}, H), embed(u));
  auto r = to_ore(c);
  if (!r) throw DomainError("internal: E_H(u) left A_h");
  return *r;
}

template <Field K>
OreElement<K> eval(const AlgebraContext<K>& ctx, const Derivation<K>& D, const OreElement<K>& u) {
  return commutator(ctx, D.w, u) + eval_special(ctx, D.H, u) + eval_delta(ctx, D.s, u);
}

/// D(h(x)) when only D(x) is known: sum_j c_j sum_{k<j} x^k D(x) x^(j-1-k).
template <Field K>
OreElement<K> image_of_poly(const AlgebraContext<K>& ctx, const Poly<K>& p, const OreElement<K>& Dx) {
  OreElement<K> out;
  for (int j = 1; j <= p.degree(); ++j) {
    if (is_zero(p[j])) continue;
    for (int k = 0; k < j; ++k)
      out += Poly<K>::monomial(p[j], k) * ore_mul(ctx, Dx, OreElement<K>(Poly<K>::monomial(K(1), j - 1 - k)));
  }
  return out;
}

/// Whether x -> Dx, t -> Dt extends to a derivation, i.e. respects tx - xt = h.
template <Field K>
bool derivation_check(const AlgebraContext<K>& ctx, const OreElement<K>& Dx, const OreElement<K>& Dt) {
  const OreElement<K> x = OreElement<K>::x(), t = OreElement<K>::t();
  const OreElement<K> lhs = ore_mul(ctx, Dt, x) + ore_mul(ctx, t, Dx) - ore_mul(ctx, Dx, t) - ore_mul(ctx, x, Dt);
  return lhs == image_of_poly(ctx, ctx.h(), Dx);
}

/// [v,-] = ad_{w+f} + E_H + Delta_{-r_rem}.
template <Field K>
struct LocSplit {
  OreElement<K> w;
  SpecialPoly<K> H;
  Poly<K> f;
  Poly<K> r_rem;
};

template <Field K>
LocSplit<K> loc_decompose(const AlgebraContext<K>& ctx, const LocElement<K>& v) {
  OreElement<K> w, H;
  LocSplit<K> out;
  for (const auto& [i, c] : v.terms()) {
    if (c.psi_pow == 0) {
      w.add_term(i, c.num);
      continue;
    }
    if (i >= 1) {
      if (c.psi_pow >= 2)
        throw NotDecomposable("coefficient of t^" + std::to_string(i) + " has psi^" + std::to_string(c.psi_pow) +
                              " in the denominator");
      auto [quo, rem] = divmod(c.num, ctx.psi());
      w.add_term(i, quo);
      H.add_term(i, rem);
      continue;
    }
    const Poly<K> pk = poly_pow(ctx.psi(), c.psi_pow);
    auto [quo, rem] = divmod(c.num, pk);
    w.add_term(0, quo);
    try {
      auto split = commutator_decompose(ctx, PsiFraction<K>{rem, c.psi_pow});
      out.f = split.f;
      out.r_rem = split.r_rem;
    } catch (const NotStable& e) {
      throw NotDecomposable(e.what());
    }
  }
  out.w = canonicalize_inner(w);
  out.H = SpecialPoly<K>::from_element(ctx, H);
  return out;
}

/// rho D rho^-1 in (w, H, s) form. a must be concrete.
template <Field K>
Derivation<K> conjugate(const AlgebraContext<K>& ctx, const Automorphism<K>& rho, const Derivation<K>& D) {
  require_valid(ctx, rho);
  const LocElement<K> img = apply_loc(ctx, rho, w_star(ctx, D.w, D.H));
  LocSplit<K> sp = loc_decompose(ctx, img);
  const Poly<K> s = power(rho.a, 1 - ctx.N()) * scale_argument(D.s, rho.a) - sp.r_rem;
  return {canonicalize_inner(sp.w + OreElement<K>(sp.f)), sp.H, s};
}

/// Recovers (w, H, s) from D(x), D(t).
template <Field K>
Derivation<K> decompose_images(const AlgebraContext<K>& ctx, const OreElement<K>& Dx, const OreElement<K>& Dt) {
  if (!derivation_check(ctx, Dx, Dt)) throw NotADerivation("the images do not respect tx - xt = h");
  const LocElement<K> X = embed(OreElement<K>::x()), T = embed(OreElement<K>::t());

  // [v, x] = Dx with v of t-degree >= 1, solved from the top: [g t^(m+1), x] = (m+1) g h t^m + lower.
  LocElement<K> v, resid = embed(Dx);
  while (!resid.is_zero()) {
    const int m = resid.deg_t();
    auto g = frac_div_poly(ctx, resid.coeff(m), K(static_cast<long>(m + 1)) * ctx.h());
    if (!g) throw NotDecomposable("D(x) leading coefficient at t^" + std::to_string(m) + " is not divisible by h in R_S");
    const LocElement<K> term = LocElement<K>::from_reduced({{m + 1, *g}});
    v = loc_add(ctx, v, term);
    resid = loc_sub(ctx, resid, loc_commutator(ctx, term, X));
  }

  // What is left of D(t) is -w_0' h + s with w_0 the t^0 part of w.
  const LocElement<K> e = loc_sub(ctx, embed(Dt), loc_commutator(ctx, v, T));
  if (e.deg_t() > 0 || !e.coeff(0).is_polynomial()) throw NotDecomposable("D(t) - [v, t] is not a polynomial in x");
  auto [quo, s] = divmod(e.coeff(0).num, ctx.h());
  v = loc_add(ctx, v, LocElement<K>(PsiFraction<K>{-antiderivative(quo), 0}));

  LocSplit<K> sp = loc_decompose(ctx, v);
  if (!sp.f.is_zero() || !sp.r_rem.is_zero()) throw NotDecomposable("internal: t^0 part of w is not polynomial");
  return {sp.w, sp.H, s};
}

/// D_p = ad_w + Delta_s with p = p_1 h + p_2, w = -int p_1, s = p_2.
template <Field K>
std::pair<OreElement<K>, Poly<K>> dp_decompose(const AlgebraContext<K>& ctx, const Poly<K>& p) {
  auto [p1, p2] = divmod(p, ctx.h());
  return {OreElement<K>(-antiderivative(p1)), p2};
}

/// D_g: x -> 0, t -> g.
template <Field K>
Derivation<K> lnd_derivation(const AlgebraContext<K>& ctx, const Poly<K>& g) {
  auto [w, s] = dp_decompose(ctx, g);
  return {w, {}, s};
}

template <Field K>
bool is_lnd(const AlgebraContext<K>& /*ctx*/, const Derivation<K>& D) {
  return D.H.is_zero() && D.w.in_polynomial_ring();
}

/// exp(D_g) = sigma_g.
template <Field K>
Automorphism<K> exp_lnd(const AlgebraContext<K>& /*ctx*/, const Poly<K>& g) {
  return Automorphism<K>::sigma(g);
}

}  // namespace oh
