#include <gtest/gtest.h>

#include "oh/testing.hpp"

using namespace oh;
using namespace oh::testing;

namespace {
using A = Automorphism<Q>;
using L = LocElement<Q>;
}  // namespace

TEST(Aut, NormalizeH) {
  auto n = normalize_h(P{0, 4, 2});
  EXPECT_EQ(n.h_star, (P{-1, 0, 1}));
  EXPECT_EQ(n.iso.gamma * n.h_star, compose_affine(P{0, 4, 2}, n.iso.alpha, n.iso.beta));
  auto id = normalize_h(P{1, 1, 0, 1});
  EXPECT_EQ(id.h_star, (P{1, 1, 0, 1}));
  EXPECT_EQ(normalize_h(P{0, 0, 0, 1}).h_star, (P{0, 0, 0, 1}));
  EXPECT_THROW(normalize_h(P{3}), DomainError);
}

TEST(Aut, TransportIsRingMap) {
  Gen g(31);
  for (int it = 0; it < 20; ++it) {
    const P h = g.poly_exact_degree(g.uniform(1, 4));
    auto n = normalize_h(h);
    AlgebraContext<Q> c1(h), c2(n.h_star);
    const E u = g.element(2, 3), v = g.element(2, 3);
    EXPECT_EQ(to_normalized(n.iso, ore_mul(c1, u, v)),
              ore_mul(c2, to_normalized(n.iso, u), to_normalized(n.iso, v)));
    EXPECT_EQ(from_normalized(n.iso, to_normalized(n.iso, u)), u);
  }
}

TEST(Aut, Group) {
  for (int N = 1; N <= 6; ++N) EXPECT_EQ(aut_group(AlgebraContext<Q>(P::monomial(Q(1), N))).order, 0);
  EXPECT_EQ(aut_group(AlgebraContext<Q>(P{1, 1, 0, 1})).order, 1);
  EXPECT_EQ(aut_group(AlgebraContext<Q>(P{0, 1, 0, 1})).order, 2);
  EXPECT_THROW(aut_group(AlgebraContext<Q>(P{0, 4, 2})), DomainError);
}

TEST(Aut, Validate) {
  AlgebraContext<Cyclotomic> x2(Poly<Cyclotomic>{0, 0, 1});
  AlgebraContext<Cyclotomic> x2m1(Poly<Cyclotomic>{-1, 0, 1});
  EXPECT_TRUE(std::get<bool>(validate(x2, Cyclotomic(2L))));
  EXPECT_TRUE(std::get<bool>(validate(x2m1, Cyclotomic::zeta(2))));
  EXPECT_FALSE(std::get<bool>(validate(x2m1, Cyclotomic(2L))));
  EXPECT_EQ(std::get<UnitConstraint>(validate(x2m1, SymbolicUnit{})).order(), 2);
  EXPECT_THROW(validate(x2, Cyclotomic(0L)), DomainError);
}

TEST(Aut, ValidateConcreteVsSymbolic) {
  Gen g(32);
  for (int it = 0; it < 30; ++it) {
    const P hq = g.normalized_h(g.uniform(1, 6));
    AlgebraContext<Cyclotomic> ctx(hq.map([](const Q& c) { return Cyclotomic(c); }));
    const int n = std::get<UnitConstraint>(validate(ctx, SymbolicUnit{})).order();
    for (int m = 1; m <= 8; ++m) {
      const bool ok = std::get<bool>(validate(ctx, Cyclotomic::zeta(m)));
      EXPECT_EQ(ok, n == 0 || n % m == 0) << to_string(hq) << " m=" << m;
    }
  }
}

TEST(Aut, ApplyExamples) {
  AlgebraContext<Q> ctx(P{0, 0, 1});
  const A rho{Q(1), P{0, 1}};
  EXPECT_EQ(apply(ctx, rho, E::t_power(2)), E::t_power(2) + E::t_power(1, P{0, 2}) + E(P{0, 0, 2}));
  const E u = E::t_power(2, P{1, 1}) + E(P{0, 3});
  EXPECT_EQ(apply(ctx, A::identity(), u), u);

  // rho(x^-1 t) = x^-1 t + p + c x^-1 for rho = sigma_{x p + c} o tau_a
  for (long a : {1L, 2L, -3L}) {
    const A r2{Q(a), P{2, 3, 1}};  // p = 3 + x, c = 2
    const L img = apply_loc(ctx, r2, L::from_reduced({{1, make_fraction(ctx, P{1}, 1)}}));
    L expect = L::from_reduced({{1, make_fraction(ctx, P{1}, 1)}});
    expect = loc_add(ctx, expect, L(make_fraction(ctx, P{2, 3, 1}, 1)));
    EXPECT_EQ(img, expect) << a;
  }
  const auto H = SpecialPoly<Q>::from_element(ctx, E::t());
  const L ws = w_star(ctx, E(P{0, -1}), H);
  EXPECT_EQ(apply_loc(ctx, A{Q(2), P{0, 0, 1}}, ws), ws);
}

TEST(Aut, APsi) {
  EXPECT_EQ(a_psi(AlgebraContext<Q>(P{0, 0, 1}), A{Q(5), {}}), Q(5));
  EXPECT_EQ(a_psi(AlgebraContext<Q>(P{1, 0, 1}), A{Q(-1), {}}), Q(1));
  EXPECT_EQ(a_psi(AlgebraContext<Q>(P{1, 0, -2, 0, 1}), A{Q(-1), {}}), Q(1));
}

TEST(Aut, ComposeInvertPower) {
  AlgebraContext<Q> ctx(P{0, 0, 1});
  EXPECT_EQ(compose(ctx, A::tau(Q(2)), A::sigma(P{0, 1})), (A{Q(2), P{0, 1}}));
  EXPECT_EQ(invert(ctx, A{Q(1), P{1, 2}}), (A{Q(1), P{-1, -2}}));
  const A rho{Q(2), P{0, 1}};
  EXPECT_EQ(compose(ctx, rho, invert(ctx, rho)), A::identity());
  EXPECT_EQ(power(ctx, rho, 2), (A{Q(4), P{0, 2}}));
  EXPECT_EQ(power(ctx, rho, 1), rho);
  EXPECT_EQ(power(ctx, A{Q(1), P{1, 1}}, 5), (A{Q(1), P{5, 5}}));
}

TEST(Aut, HomomorphismAndInverse) {
  Gen g(33);
  for (int it = 0; it < 40; ++it) {
    AlgebraContext<Q> ctx(g.mixed_h(g.uniform(1, 4)));
    const A rho = g.automorphism(ctx);
    const E u = g.element(2, 3), v = g.element(2, 3);
    EXPECT_EQ(apply(ctx, rho, ore_mul(ctx, u, v)), ore_mul(ctx, apply(ctx, rho, u), apply(ctx, rho, v)));
    EXPECT_EQ(apply(ctx, rho, E::scalar(Q(1))), E::scalar(Q(1)));
    EXPECT_EQ(apply(ctx, invert(ctx, rho), apply(ctx, rho, u)), u);
    EXPECT_EQ(apply_loc(ctx, rho, embed(u)), embed(apply(ctx, rho, u)));
    const A rho2 = g.automorphism(ctx);
    EXPECT_EQ(apply(ctx, compose(ctx, rho, rho2), u), apply(ctx, rho, apply(ctx, rho2, u)));
    A acc = rho;
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(power(ctx, rho, n), acc);
      acc = compose(ctx, acc, rho);
    }
  }
}

TEST(Aut, Symbolic) {
  AlgebraContext<Q> ctx(P{0, 0, 1});
  const E u = E::t_power(1, P{0, 1}) + E(P{0, 1});
  const auto s = apply_symbolic(ctx, P{}, u);
  for (long a : {2L, -3L, 5L}) {
    E ev;
    for (const auto& [i, lu] : s) ev.add_term(i, lu.evaluate(Q(a)));
    EXPECT_EQ(ev, apply(ctx, A::tau(Q(a)), u));
  }
  EXPECT_EQ(to_string(s), "a^2*x*t + a*x");
}
