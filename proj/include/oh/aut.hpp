#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "oh/localization.hpp"
#include "oh/unit.hpp"

namespace oh {

/// rho = sigma_r o tau_a:  rho(x) = a x,  rho(t) = a^(N-1) (t + r(x)).
template <Field K>
struct Automorphism {
  K a = K(1);
  Poly<K> r;

  static Automorphism identity() { return {K(1), {}}; }
  static Automorphism sigma(Poly<K> r) { return {K(1), std::move(r)}; }
  static Automorphism tau(const K& a) { return {a, {}}; }
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

template <Field K>
std::string to_string(const Automorphism<K>& rho) {
  return "sigma(" + to_string(rho.r) + ");tau(" + scalar_to_string(rho.a) + ")";
}

/// gamma * h_star(x) = h(alpha x + beta); the isomorphism A_h -> A_{h_star}
/// sends x to alpha x + beta and t to (gamma / alpha) t.
template <Field K>
struct IsoWitness {
  K alpha = K(1);
  K beta = K(0);
  K gamma = K(1);
};

template <Field K>
struct Normalization {
  Poly<K> h_star;
  IsoWitness<K> iso;
};

/// h_star = (1/c_N) h(x - c_{N-1} / (N c_N)): monic, no x^(N-1) term.
template <Field K>
Normalization<K> normalize_h(const Poly<K>& h) {
  const int N = h.degree();
  if (N < 1) throw DomainError("normalize_h: deg(h) must be at least 1");
  const K cN = h.leading();
  const K beta = -(h[N - 1] / (K(static_cast<long>(N)) * cN));
  Poly<K> hs = (K(1) / cN) * compose_affine(h, K(1), beta);
  return {std::move(hs), IsoWitness<K>{K(1), beta, cN}};
}

namespace detail {

/// Ring map A -> A' with x -> alpha x + beta, t -> lambda t.
template <Field K>
OreElement<K> affine_transport(const OreElement<K>& u, const K& alpha, const K& beta, const K& lambda) {
  OreElement<K> r;
  for (const auto& [i, f] : u.terms()) r.add_term(i, power(lambda, i) * compose_affine(f, alpha, beta));
  return r;
}

}  // namespace detail

/// A_h -> A_{h_star}.
template <Field K>
OreElement<K> to_normalized(const IsoWitness<K>& iso, const OreElement<K>& u) {
  return detail::affine_transport(u, iso.alpha, iso.beta, iso.gamma / iso.alpha);
}

/// A_{h_star} -> A_h (inverse of to_normalized).
template <Field K>
OreElement<K> from_normalized(const IsoWitness<K>& iso, const OreElement<K>& u) {
  const K ia = K(1) / iso.alpha;
  return detail::affine_transport(u, ia, -(iso.beta * ia), iso.alpha / iso.gamma);
}

/// Torsion part of Aut(A_h) = k[x] x| G_n.
struct AutGroupInfo {
  int order = 0;  // 0 encodes k*
  UnitConstraint exponents;  // {N - i : i in S_h, i != N}
  std::string generator;     // tau(zeta(n,1)), or tau(a) for every unit
};

template <Field K>
void require_normalized(const AlgebraContext<K>& ctx) {
  if (!ctx.is_normalized())
    throw DomainError("h must be monic of degree >= 1 with zero x^(N-1) coefficient; run normalize first");
}

template <Field K>
UnitConstraint aut_constraint(const AlgebraContext<K>& ctx) {
  UnitConstraint c;
  for (int i : ctx.support_h())
    if (i != ctx.N()) c.add(ctx.N() - i);
  return c;
}

template <Field K>
AutGroupInfo aut_group(const AlgebraContext<K>& ctx) {
  require_normalized(ctx);
  AutGroupInfo info;
  info.exponents = aut_constraint(ctx);
  info.order = info.exponents.order();
  info.generator = info.order == 0 ? "tau(a), a in k*" : "tau(zeta(" + std::to_string(info.order) + ",1))";
  return info;
}

/// h(a x) = a^N h(x) for a concrete nonzero a.
template <Field K>
bool is_valid_unit(const AlgebraContext<K>& ctx, const K& a) {
  if (is_zero(a)) throw DomainError("automorphism parameter a must be nonzero");
  return scale_argument(ctx.h(), a) == power(a, ctx.N()) * ctx.h();
}

/// Concrete a gives a boolean; the symbolic a gives the exponent constraint
/// {N - i : i in S_h}. r never affects validity.
inline std::variant<bool, UnitConstraint> validate(const AlgebraContext<Cyclotomic>& ctx, const UnitParam& a,
                                                   const Poly<Cyclotomic>& /*r*/ = {}) {
  require_normalized(ctx);
  if (const auto* c = std::get_if<Cyclotomic>(&a)) return is_valid_unit(ctx, *c);
  return aut_constraint(ctx);
}

template <Field K>
void require_valid(const AlgebraContext<K>& ctx, const Automorphism<K>& rho) {
  if (!is_valid_unit(ctx, rho.a)) throw DomainError("not an automorphism: h(a x) != a^N h(x)");
}

template <Field K>
OreElement<K> apply(const AlgebraContext<K>& ctx, const Automorphism<K>& rho, const OreElement<K>& u) {
  OreElement<K> out;
  if (u.is_zero()) return out;
  const K lam = power(rho.a, ctx.N() - 1);
  const OreElement<K> image_t = lam * (OreElement<K>::t() + OreElement<K>(rho.r));
  OreElement<K> tpow = OreElement<K>::scalar(K(1));
  for (int i = 0; i <= u.deg_t(); ++i) {
    if (i > 0) tpow = ore_mul(ctx, tpow, image_t);
    const Poly<K> f = u.coeff(i);
    if (!f.is_zero()) out += scale_argument(f, rho.a) * tpow;
  }
  return out;
}

/// psi(a x) = a_psi psi(x).
template <Field K>
K a_psi(const AlgebraContext<K>& ctx, const Automorphism<K>& rho) {
  Poly<K> quo;
  const Poly<K> scaled = scale_argument(ctx.psi(), rho.a);
  if (!divides(ctx.psi(), scaled, &quo) || quo.degree() > 0)
    throw DomainError("psi(a x) is not a constant multiple of psi(x); the automorphism is invalid");
  return quo[0];
}

/// The unique extension of rho to B: rho(psi^-k) = a_psi^-k psi^-k.
template <Field K>
LocElement<K> apply_loc(const AlgebraContext<K>& ctx, const Automorphism<K>& rho, const LocElement<K>& u) {
  LocElement<K> out;
  if (u.is_zero()) return out;
  const K ap = a_psi(ctx, rho);
  const K lam = power(rho.a, ctx.N() - 1);
  const OreElement<K> image_t = lam * (OreElement<K>::t() + OreElement<K>(rho.r));
  OreElement<K> tpow = OreElement<K>::scalar(K(1));
  for (int i = 0; i <= u.deg_t(); ++i) {
    if (i > 0) tpow = ore_mul(ctx, tpow, image_t);
    const PsiFraction<K> f = u.coeff(i);
    if (f.is_zero()) continue;
    const PsiFraction<K> img = make_fraction(ctx, power(ap, -f.psi_pow) * scale_argument(f.num, rho.a), f.psi_pow);
    out = loc_add(ctx, out, loc_scale(ctx, img, embed(tpow)));
  }
  return out;
}

/// rho1 o rho2, using tau_a o sigma_r = sigma_{a^(1-N) r(a x)} o tau_a.
template <Field K>
Automorphism<K> compose(const AlgebraContext<K>& ctx, const Automorphism<K>& rho1, const Automorphism<K>& rho2) {
  const Poly<K> moved = power(rho1.a, 1 - ctx.N()) * scale_argument(rho2.r, rho1.a);
  return {rho1.a * rho2.a, rho1.r + moved};
}

/// rho^-1 = sigma_{-a^(N-1) r(x/a)} o tau_{1/a}.
template <Field K>
Automorphism<K> invert(const AlgebraContext<K>& ctx, const Automorphism<K>& rho) {
  const K ia = K(1) / rho.a;
  return {ia, -(power(rho.a, ctx.N() - 1) * scale_argument(rho.r, ia))};
}

/// rho^n = sigma_{R_n} o tau_{a^n},  R_n(x) = sum_{i<n} a^(i(1-N)) r(a^i x).
template <Field K>
Automorphism<K> power(const AlgebraContext<K>& ctx, const Automorphism<K>& rho, int n) {
  if (n < 1) throw DomainError("automorphism power must be positive");
  Poly<K> Rn;
  K ai(1);
  for (int i = 0; i < n; ++i) {
    Rn += power(ai, 1 - ctx.N()) * scale_argument(rho.r, ai);
    ai = ai * rho.a;
  }
  return {power(rho.a, n), Rn};
}

/// Result of applying sigma_r o tau_a with a formal: t-degree -> Laurent
/// polynomial in a with k[x] coefficients.
template <Field K>
using SymbolicElement = std::map<int, LaurentUnit<K>>;

template <Field K>
SymbolicElement<K> apply_symbolic(const AlgebraContext<K>& ctx, const Poly<K>& r, const OreElement<K>& u) {
  SymbolicElement<K> out;
  const OreElement<K> shifted_t = OreElement<K>::t() + OreElement<K>(r);
  OreElement<K> tpow = OreElement<K>::scalar(K(1));
  for (int i = 0; i <= u.deg_t(); ++i) {
    if (i > 0) tpow = ore_mul(ctx, tpow, shifted_t);
    const Poly<K> f = u.coeff(i);
    for (int j = 0; j <= f.degree(); ++j) {
      if (is_zero(f[j])) continue;
      const int e = j + i * (ctx.N() - 1);
      for (const auto& [k, g] : tpow.terms()) {
        LaurentUnit<K> term(e, Poly<K>::monomial(f[j], j) * g);
        auto [it, inserted] = out.try_emplace(k, term);
        if (!inserted) it->second += term;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <Field K>
std::string to_string(const SymbolicElement<K>& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const int i = it->first;
    for (auto jt = it->second.terms().rbegin(); jt != it->second.terms().rend(); ++jt) {
      const int e = jt->first;
      const Poly<K>& p = jt->second;
      for (int j = p.degree(); j >= 0; --j) {
        if (is_zero(p[j])) continue;
        ScalarText st = format_scalar(p[j]);
        std::vector<std::string> parts;
        if (e != 0) parts.push_back(e == 1 ? "a" : "a^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
        if (j > 0) parts.push_back(j == 1 ? "x" : "x^" + std::to_string(j));
        if (i > 0) parts.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        std::string mono;
        for (const auto& part : parts) mono += (mono.empty() ? "" : "*") + part;
        const std::string coeff = st.atomic ? st.magnitude : "(" + st.magnitude + ")";
        std::string body = mono.empty() ? coeff : (st.atomic && st.magnitude == "1" ? mono : coeff + "*" + mono);
        if (out.empty())
          out = st.negative ? "-" + body : body;
        else
          out += (st.negative ? " - " : " + ") + body;
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace oh
