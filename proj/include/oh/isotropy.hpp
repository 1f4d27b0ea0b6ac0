#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oh/deriv.hpp"
#include "oh/linsolve.hpp"
#include "oh/rational_function.hpp"

namespace oh {

template <Field K>
struct MembershipReport {
  bool is_member = false;
  LocElement<K> delta;                 // rho(w*) - w*
  std::optional<PsiFraction<K>> dS_delta;  // nullopt when delta is not in R_S
  Poly<K> required_rhs;                // a^(1-N) s(a x) - s(x)
  std::optional<K> constant;           // delta itself when it is a constant
};

template <Field K>
Poly<K> required_rhs(const AlgebraContext<K>& ctx, const Automorphism<K>& rho, const Poly<K>& s) {
  return power(rho.a, 1 - ctx.N()) * scale_argument(s, rho.a) - s;
}

/// rho in Aut_D iff delta = rho(w*) - w* lies in R_S and d_S(delta) = a^(1-N) s(a x) - s(x).
template <Field K>
MembershipReport<K> check(const AlgebraContext<K>& ctx, const Derivation<K>& D, const Automorphism<K>& rho) {
  require_valid(ctx, rho);
  MembershipReport<K> rep;
  const LocElement<K> ws = w_star(ctx, D.w, D.H);
  rep.delta = loc_sub(ctx, apply_loc(ctx, rho, ws), ws);
  rep.required_rhs = required_rhs(ctx, rho, D.s);
  if (!in_base_ring(rep.delta)) return rep;
  const PsiFraction<K> d0 = rep.delta.coeff(0);
  rep.dS_delta = d_S(ctx, d0);
  if (d0.is_zero())
    rep.constant = K(0);
  else if (d0.is_polynomial() && d0.num.degree() == 0)
    rep.constant = d0.num[0];
  rep.is_member = *rep.dS_delta == make_fraction(ctx, rep.required_rhs);
  return rep;
}

/// Brute force: rho D = D rho on the generators x and t.
template <Field K>
bool check_oracle(const AlgebraContext<K>& ctx, const Derivation<K>& D, const Automorphism<K>& rho) {
  require_valid(ctx, rho);
  for (const OreElement<K>& g : {OreElement<K>::x(), OreElement<K>::t()})
    if (apply(ctx, rho, eval(ctx, D, g)) != eval(ctx, D, apply(ctx, rho, g))) return false;
  return true;
}

/// s(a x) = a^(N-1) s(x)  <=>  a^|i-(N-1)| = 1 for i in supp(s).
template <Field K>
UnitConstraint delta_torsion(const AlgebraContext<K>& ctx, const Poly<K>& s) {
  UnitConstraint c;
  for (int i : support(s)) c.add(i - (ctx.N() - 1));
  return c;
}

/// r = base, or r = base + c * direction for every constant c.
template <Field K>
struct RSolution {
  Poly<K> base;
  std::optional<Poly<K>> direction;
};

namespace detail {

/// Y / C as a polynomial in x, if it is one.
template <Field K>
std::optional<Poly<K>> poly_quotient(const AlgebraContext<K>& ctx, const PsiFraction<K>& Y, const PsiFraction<K>& C) {
  if (Y.is_zero()) return Poly<K>{};
  Poly<K> quo;
  const Poly<K> num = Y.num * poly_pow(ctx.psi(), C.psi_pow);
  const Poly<K> den = C.num * poly_pow(ctx.psi(), Y.psi_pow);
  if (!divides(den, num, &quo)) return std::nullopt;
  return quo;
}

/// Some E with deg E <= deg(psi^m) and d_S(E / psi^m) = rhs, or nullopt.
template <Field K>
std::optional<Poly<K>> solve_dS(const AlgebraContext<K>& ctx, const Poly<K>& rhs, int m) {
  const Poly<K>& psi = ctx.psi();
  const int top = m * psi.degree();
  // numerator of d_S(E / psi^m) times psi^m / psi^m; m is 0 or 1 here
  auto image = [&](const Poly<K>& E) {
    if (m == 0) return derivative(E) * ctx.h();
    return ctx.q() * (derivative(E) * psi - K(static_cast<long>(m)) * E * derivative(psi));
  };
  const Poly<K> target = rhs * poly_pow(psi, m);
  std::vector<Poly<K>> cols;
  int rows = std::max(target.degree(), 0) + 1;
  for (int j = 0; j <= top; ++j) {
    cols.push_back(image(Poly<K>::monomial(K(1), j)));
    rows = std::max(rows, cols.back().degree() + 1);
  }
  std::vector<std::vector<K>> A(static_cast<std::size_t>(rows), std::vector<K>(cols.size(), K(0)));
  std::vector<K> b(static_cast<std::size_t>(rows), K(0));
  for (int i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) A[static_cast<std::size_t>(i)][j] = cols[j][i];
    b[static_cast<std::size_t>(i)] = target[i];
  }
  auto y = solve_linear(std::move(A), std::move(b));
  if (!y) return std::nullopt;
  return Poly<K>(*y);
}

}  // namespace detail

/// For a fixed a (concrete, or the formal parameter over Q(a)), all r with
/// sigma_r o tau_a in Aut_D, assuming deg_t(w*) >= 1. Every returned r is
/// verified with check.
template <Field K>
std::optional<RSolution<K>> resolve_r(const AlgebraContext<K>& ctx, const Derivation<K>& D, const K& a) {
  const LocElement<K> ws = w_star(ctx, D.w, D.H);
  const int l = ws.deg_t();
  if (l < 1) throw DomainError("resolve_r needs deg_t(w*) >= 1");
  if (!is_valid_unit(ctx, a)) return std::nullopt;
  const Automorphism<K> tau{a, {}};
  const LocElement<K> X = loc_sub(ctx, apply_loc(ctx, tau, ws), ws);
  if (X.deg_t() >= l) return std::nullopt;  // leading coefficient not fixed
  const PsiFraction<K> cl = ws.coeff(l);

  RSolution<K> sol;
  if (l >= 2) {
    // t^(l-1) coefficient: l c_l r + X_(l-1) = 0
    auto r = detail::poly_quotient(ctx, frac_neg(X.coeff(l - 1)),
                                   frac_mul(ctx, make_fraction(ctx, Poly<K>::constant(K(static_cast<long>(l)))), cl));
    if (!r) return std::nullopt;
    sol.base = *r;
  } else {
    // c_1 r + X_0 = e with d_S(e) = rhs; e is E/psi^m plus a free constant
    if (X.deg_t() >= 1) return std::nullopt;
    const int m = cl.psi_pow;
    auto E = detail::solve_dS(ctx, required_rhs(ctx, tau, D.s), m);
    if (!E) return std::nullopt;
    const PsiFraction<K> Z = frac_sub(ctx, make_fraction(ctx, *E, m), X.coeff(0));
    const Poly<K> F0 = Z.num * poly_pow(ctx.psi(), cl.psi_pow);
    const Poly<K> F1 = poly_pow(ctx.psi(), Z.psi_pow + cl.psi_pow);
    const Poly<K> G = cl.num * poly_pow(ctx.psi(), Z.psi_pow);
    const Poly<K> R0 = F0 % G, R1 = F1 % G;
    if (R1.is_zero()) {
      if (!R0.is_zero()) return std::nullopt;
      sol.base = exact_div(F0, G);
      sol.direction = exact_div(F1, G);
    } else {
      const int d = R1.degree();
      const K c = -(R0[d] / R1[d]);
      if (!(R0 + c * R1).is_zero()) return std::nullopt;
      sol.base = exact_div(F0 + c * F1, G);
    }
  }
  if (!check(ctx, D, Automorphism<K>{a, sol.base}).is_member) return std::nullopt;
  if (sol.direction && !check(ctx, D, Automorphism<K>{a, sol.base + *sol.direction}).is_member) return std::nullopt;
  return sol;
}

enum class TorsionKind { AllUnits, CyclicOrder, Enumerated };
enum class RRule { Free, Zero, ConstantsOnly, Determined, AffineFamily };

std::string to_string(TorsionKind k);
std::string to_string(RRule r);

struct AdmissibleParam {
  Cyclotomic a;
  Poly<Cyclotomic> r;                        // base value of r
  std::optional<Poly<Cyclotomic>> direction;  // r = base + c * direction
};

/// r as a function of the formal parameter a (AllUnits case).
struct SymbolicRule {
  Poly<RationalFunction> r;
  std::optional<Poly<RationalFunction>> direction;
};

struct IsotropyDescription {
  TorsionKind torsion = TorsionKind::AllUnits;
  int order = 0;                // n for CyclicOrder, 0 for AllUnits
  UnitConstraint candidate;     // exponent constraints that bound the torsion
  RRule r_rule = RRule::Free;
  std::vector<AdmissibleParam> params;  // per admissible a, finite cases
  std::optional<SymbolicRule> symbolic;
  bool certified = true;
  std::vector<std::string> notes;
};

struct DescribeBounds {
  int order_bound = 64;  // largest root-of-unity order enumerated
  int rdeg_bound = 3;    // degree of r sampled when r is free
};

IsotropyDescription describe(const AlgebraContext<Cyclotomic>& ctx, const Derivation<Cyclotomic>& D,
                             const DescribeBounds& bounds = {});

/// Aut_{D_p}: a^|i-(N-1)| = 1 for i in supp(p), plus the Aut constraint; r free.
IsotropyDescription lnd_isotropy(const AlgebraContext<Cyclotomic>& ctx, const Poly<Cyclotomic>& p);

/// Concrete automorphisms drawn from a description (for self-checks).
std::vector<Automorphism<Cyclotomic>> sample_members(const AlgebraContext<Cyclotomic>& ctx,
                                                     const IsotropyDescription& desc, int rdeg_bound, unsigned seed);

/// One-line summary, e.g. "torsion=G_2 r=zero certified=true".
std::string summary(const IsotropyDescription& desc);

/// Coefficient conversions between the scalar fields.
std::optional<Poly<Rational>> to_rational(const Poly<Cyclotomic>& p);
Poly<Cyclotomic> to_cyclotomic(const Poly<Rational>& p);
Poly<RationalFunction> to_rational_function(const Poly<Rational>& p);

}  // namespace oh
