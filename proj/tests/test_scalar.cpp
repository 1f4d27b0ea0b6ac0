#include <gtest/gtest.h>

#include "oh/aut.hpp"
#include "oh/rational_function.hpp"

using namespace oh;
using Q = Rational;
using P = Poly<Q>;

TEST(Scalar, Derivative) {
  EXPECT_EQ(derivative(P{0, 0, 0, 1}), (P{0, 0, 3}));
  EXPECT_TRUE(derivative(P{}).is_zero());
  EXPECT_EQ(derivative(P{1, 0, 1}), (P{0, 2}));
}

TEST(Scalar, ComposeAffine) {
  EXPECT_EQ(compose_affine(P{0, 4, 2}, Q(1), Q(-1)), (P{-2, 0, 2}));
  EXPECT_THROW(compose_affine(P{1, 1}, Q(0), Q(1)), DomainError);
}

TEST(Scalar, Gcd) {
  EXPECT_EQ(poly_gcd(P{0, 0, 1}, P{0, 2}), (P{0, 1}));
  EXPECT_EQ(poly_gcd(P{0, 0, -1, 1}, P{0, -2, 3}), (P{0, 1}));
  EXPECT_EQ(poly_gcd(P{2, 4}, P{}), (P{Q(1, 2), 1}));
  EXPECT_THROW(poly_gcd(P{}, P{}), DomainError);
}

TEST(Scalar, CyclotomicPoly) {
  EXPECT_EQ(cyclotomic_poly(1), (P{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), (P{1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (P{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (P{1, 0, -1, 0, 1}));
}

TEST(Scalar, Support) {
  EXPECT_EQ(support(P{1, 1, 0, 1}), (std::set<int>{0, 1, 3}));
  EXPECT_TRUE(support(P{}).empty());
}

TEST(Scalar, ResolveConstraint) {
  EXPECT_EQ(resolve_constraint(UnitConstraint({3, 2})), 1);
  EXPECT_EQ(resolve_constraint(UnitConstraint()), 0);
  EXPECT_EQ(resolve_constraint(UnitConstraint({4, 6})), 2);
  EXPECT_EQ(resolve_constraint(UnitConstraint({4, 6, 0})), 2);
}

TEST(Scalar, ZetaOrder) {
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(Cyclotomic::zeta(m).root_of_unity_order(), m) << m;
  EXPECT_EQ(Cyclotomic(2L).root_of_unity_order(), 0);
}
