#include <gtest/gtest.h>

#include "oh/testing.hpp"

using namespace oh;
using namespace oh::testing;

namespace {
AlgebraContext<Q> ctx_x2() { return AlgebraContext<Q>(P{0, 0, 1}); }
}  // namespace

TEST(Ore, BasicProducts) {
  auto ctx = ctx_x2();
  EXPECT_EQ(ore_mul(ctx, E::t(), E::x()), E::t_power(1, P{0, 1}) + E(P{0, 0, 1}));
  EXPECT_EQ(to_string(ore_mul(ctx, E::t(), E(P{0, 0, 1}))), "x^2*t + 2*x^3");
  EXPECT_EQ(ore_mul(ctx, E::t(), E::t()), E::t_power(2));
}

TEST(Ore, DegT) {
  EXPECT_EQ(E(P{1, 0, 0, 1}).deg_t(), 0);
  EXPECT_EQ((E::t_power(2, P{0, 1}) + E::t()).deg_t(), 2);
  EXPECT_EQ(E{}.deg_t(), kMinusInfinity);
}

TEST(Ore, Commutators) {
  auto ctx = ctx_x2();
  EXPECT_EQ(commutator(ctx, E::t(), E::x()), E(ctx.h()));
  EXPECT_EQ(commutator(ctx, E::t_power(2), E::x()), E::t_power(1, P{0, 0, 2}) + E(P{0, 0, 0, 2}));
  const E u = E::t_power(3, P{1, 2}) + E(P{0, 5});
  EXPECT_TRUE(commutator(ctx, u, u).is_zero());
}

TEST(Ore, Powers) {
  auto ctx = ctx_x2();
  const P r{1, 0, 3};
  const E tr = E::t() + E(r);
  const E expect = E::t_power(2) + E::t_power(1, Q(2) * r) + E(derivative(r) * ctx.h() + r * r);
  EXPECT_EQ(ore_pow(ctx, tr, 2), expect);
  EXPECT_EQ(ore_pow(ctx, tr, 0), E::scalar(Q(1)));
  EXPECT_EQ(ore_pow(ctx, tr, 1), tr);
}

TEST(Ore, Associativity) {
  Gen g(11);
  for (int it = 0; it < 30; ++it) {
    AlgebraContext<Q> ctx(g.poly_exact_degree(g.uniform(0, 4)));
    const E u = g.element(3, 4), v = g.element(3, 4), w = g.element(2, 4);
    EXPECT_EQ(ore_mul(ctx, ore_mul(ctx, u, v), w), ore_mul(ctx, u, ore_mul(ctx, v, w)));
  }
}

TEST(Ore, DegreeAdditivity) {
  Gen g(12);
  for (int it = 0; it < 50; ++it) {
    AlgebraContext<Q> ctx(g.poly_exact_degree(g.uniform(0, 4)));
    const E u = g.element(4, 6), v = g.element(4, 6);
    if (u.is_zero() || v.is_zero()) continue;
    EXPECT_EQ(ore_mul(ctx, u, v).deg_t(), u.deg_t() + v.deg_t());
  }
}
