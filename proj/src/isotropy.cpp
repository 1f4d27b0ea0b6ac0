#include "oh/isotropy.hpp"

#include <random>

namespace oh {

std::string to_string(TorsionKind k) {
  switch (k) {
    case TorsionKind::AllUnits: return "all-units";
    case TorsionKind::CyclicOrder: return "cyclic";
    case TorsionKind::Enumerated: return "enumerated";
  }
  return "?";
}

std::string to_string(RRule r) {
  switch (r) {
    case RRule::Free: return "free";
    case RRule::Zero: return "zero";
    case RRule::ConstantsOnly: return "constants";
    case RRule::Determined: return "determined";
    case RRule::AffineFamily: return "affine-family";
  }
  return "?";
}

std::optional<Poly<Rational>> to_rational(const Poly<Cyclotomic>& p) {
  std::vector<Rational> c;
  for (const auto& z : p.coeffs()) {
    if (!z.is_rational()) return std::nullopt;
    c.push_back(z.rational_value());
  }
  return Poly<Rational>(std::move(c));
}

Poly<Cyclotomic> to_cyclotomic(const Poly<Rational>& p) {
  return p.map([](const Rational& c) { return Cyclotomic(c); });
}

Poly<RationalFunction> to_rational_function(const Poly<Rational>& p) {
  return p.map([](const Rational& c) { return RationalFunction(c); });
}

namespace {

std::optional<OreElement<RationalFunction>> lift(const OreElement<Cyclotomic>& u) {
  OreElement<RationalFunction> r;
  for (const auto& [i, f] : u.terms()) {
    auto q = to_rational(f);
    if (!q) return std::nullopt;
    r.add_term(i, to_rational_function(*q));
  }
  return r;
}

/// Rule for the whole list of admissible parameters.
RRule classify(const std::vector<AdmissibleParam>& params) {
  bool any_dir = false, all_zero = true, consts = true;
  for (const auto& p : params) {
    if (!p.r.is_zero()) all_zero = false;
    if (p.direction) {
      any_dir = true;
      if (p.direction->degree() != 0) consts = false;
    } else {
      consts = false;
    }
  }
  if (any_dir) return all_zero && consts ? RRule::ConstantsOnly : RRule::AffineFamily;
  return all_zero ? RRule::Zero : RRule::Determined;
}

RRule classify(const SymbolicRule& s) {
  if (s.direction) return s.r.is_zero() && s.direction->degree() == 0 ? RRule::ConstantsOnly : RRule::AffineFamily;
  return s.r.is_zero() ? RRule::Zero : RRule::Determined;
}

bool laurent(const Poly<RationalFunction>& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_laurent()) return false;
  return true;
}

void set_torsion_from_params(IsotropyDescription& desc) {
  const int d = static_cast<int>(desc.params.size());
  bool group = d > 0;
  for (const auto& p : desc.params)
    if (power(p.a, d) != Cyclotomic(1L)) group = false;
  desc.torsion = group ? TorsionKind::CyclicOrder : TorsionKind::Enumerated;
  desc.order = group ? d : 0;
}

std::optional<AdmissibleParam> admissible(const AlgebraContext<Cyclotomic>& ctx, const Derivation<Cyclotomic>& D,
                                          const Cyclotomic& a) {
  auto sol = resolve_r(ctx, D, a);
  if (!sol) return std::nullopt;
  return AdmissibleParam{a, sol->base, sol->direction};
}

}  // namespace

IsotropyDescription describe(const AlgebraContext<Cyclotomic>& ctx, const Derivation<Cyclotomic>& D,
                             const DescribeBounds& bounds) {
  require_normalized(ctx);
  IsotropyDescription desc;
  desc.candidate = aut_constraint(ctx);
  const LocElement<Cyclotomic> ws = w_star(ctx, D.w, D.H);
  const int l = ws.deg_t();

  if (l <= 0) {
    // w in k[x]: w(a x) = w(x) and s(a x) = a^(N-1) s(x); r is unconstrained.
    for (int j : support(D.w.coeff(0)))
      if (j != 0) desc.candidate.add(j);
    desc.candidate.merge(delta_torsion(ctx, D.s));
    desc.order = desc.candidate.order();
    desc.torsion = desc.order == 0 ? TorsionKind::AllUnits : TorsionKind::CyclicOrder;
    desc.r_rule = RRule::Free;
    return desc;
  }

  // a^(l(N-1)) rho(c_l) = c_l for the leading coefficient c_l = num / psi^k.
  const PsiFraction<Cyclotomic> cl = ws.coeff(l);
  const int e = cl.psi_pow * ctx.psi().degree() - l * (ctx.N() - 1);
  for (int j : support(cl.num)) desc.candidate.add(j - e);
  if (D.H.is_zero()) desc.candidate.merge(delta_torsion(ctx, D.s));
  const int n = desc.candidate.order();

  if (n > 0) {
    if (n > bounds.order_bound)
      throw BoundsExceeded("torsion candidate G_" + std::to_string(n) + " exceeds the order bound " +
                           std::to_string(bounds.order_bound));
    for (int k = 0; k < n; ++k)
      if (auto p = admissible(ctx, D, Cyclotomic::zeta(n, k).simplified())) desc.params.push_back(*p);
    set_torsion_from_params(desc);
    desc.r_rule = classify(desc.params);
    return desc;
  }

  // Candidate is all of k*: resolve r once over Q(a).
  auto h = to_rational(ctx.h());
  auto w = lift(D.w);
  auto H = lift(D.H.element());
  auto s = to_rational(D.s);
  if (h && w && H && s) {
    AlgebraContext<RationalFunction> rctx(to_rational_function(*h));
    const Derivation<RationalFunction> rD = make_derivation(rctx, *w, *H, to_rational_function(*s));
    if (auto sol = resolve_r(rctx, rD, RationalFunction::parameter())) {
      desc.torsion = TorsionKind::AllUnits;
      desc.order = 0;
      desc.symbolic = SymbolicRule{sol->base, sol->direction};
      desc.r_rule = classify(*desc.symbolic);
      desc.certified = laurent(sol->base) && (!sol->direction || laurent(*sol->direction));
      if (!desc.certified) desc.notes.push_back("r has poles at some nonzero a; rule holds away from them");
      return desc;
    }
    desc.notes.push_back("no r exists for generic a; enumerating roots of unity");
  } else {
    desc.notes.push_back("coefficients are not rational; enumerating roots of unity");
  }

  if (bounds.order_bound < 1) throw BoundsExceeded("symbolic resolution failed and the order bound is 0");
  for (int m = 1; m <= bounds.order_bound; ++m)
    for (int k = 0; k < m; ++k)
      if (std::gcd(k, m) == 1)
        if (auto p = admissible(ctx, D, Cyclotomic::zeta(m, k).simplified())) desc.params.push_back(*p);
  set_torsion_from_params(desc);
  desc.r_rule = classify(desc.params);
  desc.certified = false;
  return desc;
}

IsotropyDescription lnd_isotropy(const AlgebraContext<Cyclotomic>& ctx, const Poly<Cyclotomic>& p) {
  require_normalized(ctx);
  IsotropyDescription desc;
  desc.candidate = aut_constraint(ctx);
  desc.candidate.merge(delta_torsion(ctx, p));
  desc.order = desc.candidate.order();
  desc.torsion = desc.order == 0 ? TorsionKind::AllUnits : TorsionKind::CyclicOrder;
  desc.r_rule = RRule::Free;
  return desc;
}

std::vector<Automorphism<Cyclotomic>> sample_members(const AlgebraContext<Cyclotomic>& ctx,
                                                     const IsotropyDescription& desc, int rdeg_bound, unsigned seed) {
  std::mt19937 rng(seed);
  auto random_r = [&] {
    std::vector<Cyclotomic> c;
    const int d = std::uniform_int_distribution<int>(-1, rdeg_bound)(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(std::uniform_int_distribution<int>(-4, 4)(rng)));
    return Poly<Cyclotomic>(std::move(c));
  };
  std::vector<Automorphism<Cyclotomic>> out;
  auto emit = [&](const Cyclotomic& a, const Poly<Cyclotomic>& base, const std::optional<Poly<Cyclotomic>>& dir) {
    if (desc.r_rule == RRule::Free) {
      out.push_back({a, {}});
      out.push_back({a, random_r()});
      return;
    }
    out.push_back({a, base});
    if (dir)
      for (long c : {1L, -3L}) out.push_back({a, base + Cyclotomic(c) * *dir});
  };

  if (desc.torsion != TorsionKind::AllUnits) {
    if (desc.params.empty())  // cyclic rule with free r, from the w in k[x] case
      for (int k = 0; k < std::max(desc.order, 1); ++k) emit(Cyclotomic::zeta(std::max(desc.order, 1), k).simplified(), {}, {});
    for (const auto& p : desc.params) emit(p.a, p.r, p.direction);
    return out;
  }
  std::vector<Cyclotomic> as = {Cyclotomic(1L), Cyclotomic(2L), Cyclotomic(-1L), Cyclotomic(Rational(1, 2)),
                                Cyclotomic(3L), Cyclotomic::zeta(3), Cyclotomic::zeta(5, 2)};
  for (const auto& a : as) {
    if (!is_valid_unit(ctx, a)) continue;
    if (!desc.symbolic) {
      emit(a, {}, {});
      continue;
    }
    try {
      std::optional<Poly<Cyclotomic>> dir;
      if (desc.symbolic->direction) dir = evaluate_at(*desc.symbolic->direction, a);
      emit(a, evaluate_at(desc.symbolic->r, a), dir);
    } catch (const DomainError&) {
      // pole of the symbolic rule
    }
  }
  return out;
}

std::string summary(const IsotropyDescription& desc) {
  std::string torsion;
  switch (desc.torsion) {
    case TorsionKind::AllUnits: torsion = "k*"; break;
    case TorsionKind::CyclicOrder: torsion = group_name(desc.order); break;
    case TorsionKind::Enumerated: torsion = "{" + std::to_string(desc.params.size()) + " units}"; break;
  }
  return "torsion=" + torsion + " r=" + to_string(desc.r_rule) + " certified=" + (desc.certified ? "true" : "false");
}

}  // namespace oh
