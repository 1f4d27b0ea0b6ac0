#pragma once

#include <random>

#include "oh/deriv.hpp"

namespace oh::testing {

using Q = Rational;
using P = Poly<Rational>;
using E = OreElement<Rational>;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Q scalar(int bound = 5) {
    long n = uniform(-bound, bound), d = uniform(1, 3);
    return Q(n, d);
  }
  Q nonzero_scalar(int bound = 5) {
    Q c;
    while (c.is_zero()) c = scalar(bound);
    return c;
  }
  P poly(int max_deg, int bound = 5) {
    const int d = uniform(-1, max_deg);
    std::vector<Q> c;
    for (int i = 0; i <= d; ++i) c.push_back(uniform(0, 2) == 0 ? Q(0) : scalar(bound));
    return P(c);
  }
  P poly_exact_degree(int deg, int bound = 5) {
    std::vector<Q> c;
    for (int i = 0; i < deg; ++i) c.push_back(uniform(0, 2) == 0 ? Q(0) : scalar(bound));
    c.push_back(nonzero_scalar(bound));
    return P(c);
  }
  E element(int max_tdeg, int max_xdeg, int bound = 5) {
    E e;
    const int d = uniform(0, max_tdeg);
    for (int i = 0; i <= d; ++i) e.add_term(i, poly(max_xdeg, bound));
    return e;
  }
  /// Monic, no x^(N-1) term.
  P normalized_h(int N) {
    std::vector<Q> c;
    for (int i = 0; i < N - 1; ++i) c.push_back(uniform(0, 1) == 0 ? Q(0) : Q(uniform(-3, 3)));
    c.push_back(Q(0));
    c.push_back(Q(1));
    return P(c);
  }
  /// Mix of square-free and singular normalized h of degree N.
  P mixed_h(int N) {
    switch (uniform(0, 3)) {
      case 0: return P::monomial(Q(1), N);
      case 1: {
        // x^k * (square-free part) with repeated root at 0, shifted to normal form.
        const int k = uniform(2, std::max(2, N));
        P f = P::monomial(Q(1), std::min(k, N));
        if (N > f.degree()) f = f * poly_exact_degree(N - f.degree(), 3);
        return normalize_h(f).h_star;
      }
      default: return normalized_h(N);
    }
  }
  OreElement<Rational> special(const AlgebraContext<Rational>& ctx, int max_tdeg) {
    E H;
    const int dpsi = ctx.psi().degree();
    if (dpsi <= 0) return H;
    const int d = uniform(0, max_tdeg);
    for (int i = 1; i <= d; ++i) H.add_term(i, poly(dpsi - 1, 3));
    return H;
  }
  Derivation<Rational> derivation(const AlgebraContext<Rational>& ctx, int max_tdeg) {
    const E w = element(max_tdeg, 3, 4);
    const E H = special(ctx, max_tdeg);
    const P s = poly(ctx.N() - 1, 4);
    return make_derivation(ctx, w, H, s);
  }
  /// Valid automorphism: a chosen from the admissible torsion.
  Automorphism<Rational> automorphism(const AlgebraContext<Rational>& ctx, int max_rdeg = 3) {
    const int n = aut_group(ctx).order;
    Q a(1);
    if (n == 0)
      a = nonzero_scalar(3);
    else if (n % 2 == 0 && uniform(0, 1))
      a = Q(-1);
    return {a, poly(max_rdeg, 3)};
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oh::testing
