#include <gtest/gtest.h>

#include "oh/testing.hpp"

using namespace oh;
using namespace oh::testing;

namespace {
using A = Automorphism<Q>;
using L = LocElement<Q>;
using D = Derivation<Q>;
AlgebraContext<Q> ctx_x2() { return AlgebraContext<Q>(P{0, 0, 1}); }
}  // namespace

TEST(Deriv, EvalExamples) {
  auto ctx = ctx_x2();
  const D delta = make_derivation(ctx, E{}, E{}, P{1, 3});
  EXPECT_TRUE(eval(ctx, delta, E::x()).is_zero());
  EXPECT_EQ(eval(ctx, delta, E::t()), E(P{1, 3}));
  const D et = make_derivation(ctx, E{}, E::t(), P{});
  EXPECT_EQ(eval(ctx, et, E::x()), E(P{0, 1}));
  const D ad = make_derivation(ctx, E(P{0, 0, Q(-1, 2)}), E{}, P{});
  EXPECT_EQ(eval(ctx, ad, E::t()), E(P{0, 0, 0, 1}));
}

TEST(Deriv, Check) {
  auto ctx = ctx_x2();
  EXPECT_TRUE(derivation_check(ctx, E{}, E(P{2, 1})));
  EXPECT_FALSE(derivation_check(ctx, E(P{1}), E{}));
  const E w = E::t_power(2, P{1, 1}) + E::t();
  EXPECT_TRUE(derivation_check(ctx, commutator(ctx, w, E::x()), commutator(ctx, w, E::t())));
}

TEST(Deriv, CheckNoncommutingImage) {
  // D(x) = [t^2, x] does not commute with x, so D(h) != h' D(x) in general.
  AlgebraContext<Q> ctx(P{0, 0, 0, 1});
  const E w = E::t_power(2);
  EXPECT_TRUE(derivation_check(ctx, commutator(ctx, w, E::x()), commutator(ctx, w, E::t())));
}

TEST(Deriv, LocDecompose) {
  auto ctx = ctx_x2();
  const P p{3, 1};
  L v = L::from_reduced({{1, make_fraction(ctx, P{1}, 1)}});
  v = loc_add(ctx, v, L(make_fraction(ctx, P{2, 3, 1}, 1)));  // p + 2/x
  auto sp = loc_decompose(ctx, v);
  EXPECT_EQ(sp.w, E(P{0, 1}));
  EXPECT_EQ(sp.H.element(), E::t());
  EXPECT_TRUE(sp.f.is_zero());
  EXPECT_EQ(sp.r_rem, P{-2});
  const E inner = E::t_power(2, P{1, 1}) + E(P{5, 1});
  auto sp2 = loc_decompose(ctx, embed(inner));
  EXPECT_EQ(sp2.w, canonicalize_inner(inner));
  EXPECT_TRUE(sp2.H.is_zero());
  EXPECT_THROW(loc_decompose(ctx, L::from_reduced({{1, make_fraction(ctx, P{1}, 2)}})), NotDecomposable);
}

TEST(Deriv, ConjugateExamples) {
  auto ctx = ctx_x2();
  const D et = make_derivation(ctx, E{}, E::t(), P{});
  const D got = conjugate(ctx, A{Q(1), P{2, 1}}, et);  // p = 1, c = 2
  EXPECT_EQ(got, make_derivation(ctx, E{}, E::t(), P{2}));
  const D got2 = conjugate(ctx, A{Q(3), P{2, 1, 1}}, et);  // p = 1 + x, c = 2
  EXPECT_EQ(got2, make_derivation(ctx, E(P{0, 1}), E::t(), P{2}));
  const D delta = make_derivation(ctx, E{}, E{}, P{1, 1});
  EXPECT_EQ(conjugate(ctx, A{Q(2), P{0, 5}}, delta), make_derivation(ctx, E{}, E{}, P{Q(1, 2), 1}));
  EXPECT_EQ(conjugate(ctx, A::identity(), et), et);
}

TEST(Deriv, DecomposeExamples) {
  auto ctx = ctx_x2();
  auto [w, s] = dp_decompose(ctx, P{0, 0, 0, 1});
  EXPECT_EQ(w, E(P{0, 0, Q(-1, 2)}));
  EXPECT_TRUE(s.is_zero());
  const D dp = decompose_images(ctx, E{}, E(P{0, 0, 0, 1}));
  EXPECT_EQ(dp, make_derivation(ctx, E(P{0, 0, Q(-1, 2)}), E{}, P{}));
  EXPECT_EQ(decompose_images(ctx, E{}, E(P{1, 2})), make_derivation(ctx, E{}, E{}, P{1, 2}));
  const D d = make_derivation(ctx, E::x(), E::t(), P{});
  EXPECT_EQ(decompose_images(ctx, eval(ctx, d, E::x()), eval(ctx, d, E::t())), d);
  EXPECT_THROW(decompose_images(ctx, E(P{1}), E{}), NotADerivation);
  auto [w0, s0] = dp_decompose(ctx, P{1, 1});
  EXPECT_TRUE(w0.is_zero());
  EXPECT_EQ(s0, (P{1, 1}));
}

TEST(Deriv, Lnd) {
  auto ctx = ctx_x2();
  EXPECT_TRUE(is_lnd(ctx, make_derivation(ctx, E{}, E{}, P{1})));
  EXPECT_FALSE(is_lnd(ctx, make_derivation(ctx, E::t(), E{}, P{})));
  EXPECT_TRUE(is_lnd(ctx, lnd_derivation(ctx, P{1, 2, 3, 4})));
  EXPECT_EQ(exp_lnd(ctx, P{0, 1}), A::sigma(P{0, 1}));
  EXPECT_EQ(exp_lnd(ctx, P{}), A::identity());
  EXPECT_EQ(compose(ctx, exp_lnd(ctx, P{1, 1}), exp_lnd(ctx, P{0, 2})), exp_lnd(ctx, P{1, 3}));
}

TEST(Deriv, Properties) {
  Gen g(41);
  for (int it = 0; it < 40; ++it) {
    AlgebraContext<Q> ctx(g.mixed_h(g.uniform(2, 4)));
    const D d = g.derivation(ctx, 3);
    const E u = g.element(2, 3), v = g.element(2, 3);
    EXPECT_EQ(eval(ctx, d, ore_mul(ctx, u, v)),
              ore_mul(ctx, eval(ctx, d, u), v) + ore_mul(ctx, u, eval(ctx, d, v)));
    EXPECT_EQ(decompose_images(ctx, eval(ctx, d, E::x()), eval(ctx, d, E::t())), d) << to_string(d);
    const A r1 = g.automorphism(ctx, 2), r2 = g.automorphism(ctx, 2);
    EXPECT_EQ(conjugate(ctx, r1, conjugate(ctx, invert(ctx, r1), d)), d);
    EXPECT_EQ(conjugate(ctx, compose(ctx, r1, r2), d), conjugate(ctx, r1, conjugate(ctx, r2, d)));
    // conjugate agrees with rho D rho^-1 on generators
    const D c = conjugate(ctx, r1, d);
    const A inv = invert(ctx, r1);
    for (const E& gen : {E::x(), E::t()})
      EXPECT_EQ(eval(ctx, c, gen), apply(ctx, r1, eval(ctx, d, apply(ctx, inv, gen))));
    if (ctx.square_free()) EXPECT_TRUE(c.H.is_zero());
    const D inner = make_derivation(ctx, d.w, E{}, P{});
    const D rt = decompose_images(ctx, eval(ctx, inner, E::x()), eval(ctx, inner, E::t()));
    EXPECT_TRUE(rt.H.is_zero() && rt.s.is_zero());
  }
}
