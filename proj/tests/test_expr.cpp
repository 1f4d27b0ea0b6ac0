#include <gtest/gtest.h>

#include <random>

#include "oh/expr.hpp"

using namespace oh;
using K = Expr::Kind;

namespace {

CPoly cp(std::initializer_list<long> c) {
  std::vector<Cyclotomic> v;
  for (long x : c) v.emplace_back(x);
  return CPoly(v);
}

// Already in printed form: print(parse(s)) == s.
const char* const kCanonical[] = {
    "0", "1", "17", "2/3", "x", "t", "-x", "--x", "x + 1", "x - 1", "x + -1", "x - -1", "2*x", "x*2",
    "x*t", "t*x", "t*x - x*t", "x^2", "x^10", "t^3", "(x + 1)^2", "(2/3)^2", "(-x)^3", "(x*t)^2", "-x^2",
    "x*-t", "2*x^3 + x^2*t", "(x + 1)*(x - 1)", "x - (x - 1)", "x - (t + 1)", "x*(t*x)", "(x + t)*x",
    "x*t*x", "(x^2)^3", "zeta(3,1)", "zeta(5,2)*x", "zeta(1,0) + 2", "x^2 + zeta(4,1)*x + 1",
    "sigma(x^2)", "tau(2)", "tau(-1)", "tau(sym)", "sigma(x^2);tau(2)", "sigma(x);tau(sym)",
    "tau(2);sigma(x);tau(1/2)", "sigma(1/2*x^2 - 3)", "deriv(w=x, H=0, s=0)", "deriv(w=-x, H=t, s=0)",
    "deriv(w=t^2 + x*t, H=x*t, s=x + 1)", "deriv(w=0, H=0, s=x^2)", "tau(zeta(6,1))", "x^2*t^2 - t^2*x^2",
    "1/2*t + x", "(t + x)^4 - t^4",
};

}  // namespace

TEST(Expr, CanonicalCorpusRoundTrips) {
  ASSERT_GE(std::size(kCanonical), 50u);
  for (const char* s : kCanonical) {
    const ExprPtr e = parse(s);
    EXPECT_EQ(print(e), s);
    EXPECT_TRUE(*parse(print(e)) == *e) << s;
  }
}

TEST(Expr, WhitespaceAndFieldOrder) {
  EXPECT_EQ(print(parse("  x*t+  2 ")), "x*t + 2");
  EXPECT_EQ(print(parse("deriv(s=1, w=t)")), "deriv(w=t, H=0, s=1)");
  EXPECT_EQ(print(parse("sigma( x ) ; tau( 3 )")), "sigma(x);tau(3)");
  EXPECT_EQ(print(parse("tau( sym )")), "tau(sym)");
}

TEST(Expr, RandomTreesRoundTrip) {
  std::mt19937 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    if (depth == 0 || pick(0, 3) == 0) {
      switch (pick(0, 3)) {
        case 0: return make_leaf(K::X);
        case 1: return make_leaf(K::T);
        case 2: return make_num(Rational(pick(0, 9), pick(1, 4)));
        default: return make_zeta(pick(1, 6), pick(0, 5));
      }
    }
    switch (pick(0, 4)) {
      case 0: return make_node(K::Neg, {gen(depth - 1)});
      case 1: return make_node(K::Add, {gen(depth - 1), gen(depth - 1)});
      case 2: return make_node(K::Sub, {gen(depth - 1), gen(depth - 1)});
      case 3: return make_node(K::Mul, {gen(depth - 1), gen(depth - 1)});
      default: return make_node(K::Pow, {gen(depth - 1)}, pick(0, 4));
    }
  };
  for (int i = 0; i < 500; ++i) {
    const ExprPtr e = gen(5);
    const std::string s = print(e);
    EXPECT_TRUE(*parse(s) == *e) << s;
  }
}

TEST(Expr, SyntaxErrorsCarryOffsets) {
  try {
    parse("t*(");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  auto offset_of = [](const char* s) -> std::size_t {
    try {
      parse(s);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of("x + y"), 4u);
  EXPECT_EQ(offset_of("x )"), 2u);
  EXPECT_EQ(offset_of("1/0"), 2u);
  EXPECT_EQ(offset_of("x^100000"), 2u);
  EXPECT_EQ(offset_of("deriv(w=x, w=t)"), 11u);
  EXPECT_EQ(offset_of("sigma(x);rho(2)"), 9u);
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_THROW(parse("zeta(0,1)"), SyntaxError);
  EXPECT_THROW(parse("x t"), SyntaxError);
}

TEST(Expr, EvaluatesInTheAlgebra) {
  const CAlgebra ctx(cp({1, 0, 1}));  // x^2 + 1
  EXPECT_EQ(parse_element("t*x - x*t", ctx), CElement(cp({1, 0, 1})));
  EXPECT_EQ(parse_element("t*x^2", ctx), CElement::t_power(1, cp({0, 0, 1})) + CElement(cp({0, 2, 0, 2})));
  EXPECT_EQ(parse_element("zeta(4,1)^2", ctx), CElement::scalar(Cyclotomic(-1L)));
  EXPECT_EQ(parse_poly("(x + 1)^2"), cp({1, 2, 1}));
  EXPECT_THROW(parse_poly("x*t"), UsageError);
}

TEST(Expr, AutomorphismsComposeRightToLeft) {
  const CAlgebra ctx(cp({0, 0, 1}));
  EXPECT_EQ(parse_automorphism("sigma(x^2);tau(2)", ctx), (CAut{Cyclotomic(2L), cp({0, 0, 1})}));
  const CAut a = parse_automorphism("tau(2);sigma(x)", ctx);
  EXPECT_EQ(a, compose(ctx, CAut::tau(Cyclotomic(2L)), CAut::sigma(cp({0, 1}))));
  EXPECT_THROW(parse_automorphism("tau(0)", ctx), DomainError);
  EXPECT_THROW(parse_automorphism("tau(x)", ctx), UsageError);
  EXPECT_THROW(parse_automorphism("tau(sym)", ctx), UsageError);
  EXPECT_EQ(symbolic_shift(parse("sigma(x);tau(sym)")), std::optional<CPoly>(cp({0, 1})));
  EXPECT_EQ(symbolic_shift(parse("tau(2)")), std::nullopt);
  EXPECT_THROW(symbolic_shift(parse("tau(sym);sigma(x)")), UsageError);
}

TEST(Expr, Derivations) {
  const CAlgebra ctx(cp({0, 0, 1}));
  const CDeriv D = parse_derivation("deriv(w=-x, H=t, s=0)", ctx);
  EXPECT_EQ(D, make_derivation(ctx, CElement(cp({0, -1})), CElement::t(), CPoly{}));
  EXPECT_THROW(parse_derivation("x", ctx), UsageError);
  EXPECT_THROW(parse_derivation("deriv(s=x^2)", ctx), DomainError);
}
