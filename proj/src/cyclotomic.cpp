#include "oh/cyclotomic.hpp"

#include <map>
#include <numeric>

namespace oh {

int euler_phi(int m) {
  if (m < 1) throw DomainError("euler_phi: argument must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Poly<Rational> cyclotomic_poly(int m) {
  if (m < 1) throw DomainError("cyclotomic_poly: order must be positive");
  thread_local std::map<int, Poly<Rational>> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  Poly<Rational> p = Poly<Rational>::monomial(Rational(1), m) - Poly<Rational>::constant(Rational(1));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = exact_div(p, cyclotomic_poly(d));
  cache.emplace(m, p);
  return p;
}

namespace {

int normalize_conductor(int m) { return m == 2 ? 1 : m; }

}  // namespace

Cyclotomic Cyclotomic::reduce(int m, const Poly<Rational>& p) {
  m = normalize_conductor(m);
  Poly<Rational> r = p % cyclotomic_poly(m);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r[i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
  if (m < 1) throw DomainError("zeta: order must be positive");
  long e = ((k % m) + m) % m;
  if (m == 2) return Cyclotomic(Rational(e == 0 ? 1 : -1));
  return reduce(m, Poly<Rational>::monomial(Rational(1), static_cast<int>(e)));
}

Cyclotomic Cyclotomic::from_coeffs(int m, const std::vector<Rational>& coeffs) {
  if (m < 1) throw DomainError("cyclotomic conductor must be positive");
  if (m == 2) {
    // zeta_2 = -1
    Rational v(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) v += (i % 2 ? -coeffs[i] : coeffs[i]);
    return Cyclotomic(v);
  }
  return reduce(m, Poly<Rational>(coeffs));
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const { return c_[0]; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Cyclotomic Cyclotomic::lifted(int L) const {
  L = normalize_conductor(L);
  if (L == m_) return *this;
  if (L % m_ != 0) throw DomainError("cannot lift cyclotomic element to a non-multiple conductor");
  const int step = L / m_;
  std::vector<Rational> big(static_cast<std::size_t>(step) * c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) big[i * static_cast<std::size_t>(step)] = c_[i];
  return reduce(L, Poly<Rational>(std::move(big)));
}

Cyclotomic Cyclotomic::simplified() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  for (int d = 3; d < m_; ++d) {
    if (m_ % d != 0) continue;
    // Candidate in conductor d: coefficients supported on multiples of m_/d.
    const int step = m_ / d;
    bool ok = true;
    std::vector<Rational> small;
    for (std::size_t i = 0; i < c_.size() && ok; ++i) {
      if (c_[i].is_zero()) continue;
      if (static_cast<int>(i) % step != 0) ok = false;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < c_.size(); i += static_cast<std::size_t>(step)) small.push_back(c_[i]);
    Cyclotomic cand = from_coeffs(d, small);
    if (cand.lifted(m_).c_ == c_) return cand;
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (m_ == 1) return Cyclotomic(c_[0].inverse());
  auto [g, u, v] = poly_xgcd(as_poly(), cyclotomic_poly(m_));
  (void)v;
  if (g.degree() != 0) throw DomainError("cyclotomic inverse failed");
  return reduce(m_, u);
}

int Cyclotomic::root_of_unity_order() const {
  const int L = std::lcm(2, m_);
  if (!(power(*this, L) == Cyclotomic(1L))) return 0;
  for (int d = 1; d <= L; ++d)
    if (L % d == 0 && power(*this, d) == Cyclotomic(1L)) return d;
  return L;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Cyclotomic(a.m_, std::move(c));
  }
  const int L = std::lcm(a.m_, b.m_);
  return a.lifted(L) + b.lifted(L);
}

Cyclotomic operator-(const Cyclotomic& a) {
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
  return Cyclotomic(a.m_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == 1) {
    std::vector<Rational> c(b.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[0] * b.c_[i];
    return Cyclotomic(b.m_, std::move(c));
  }
  if (b.m_ == 1) return b * a;
  if (a.m_ == b.m_) return Cyclotomic::reduce(a.m_, a.as_poly() * b.as_poly());
  const int L = std::lcm(a.m_, b.m_);
  return a.lifted(L) * b.lifted(L);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const int L = std::lcm(a.m_, b.m_);
  return a.lifted(L).c_ == b.lifted(L).c_;
}

std::string Cyclotomic::str() const { return scalar_to_string(*this); }

ScalarText format_scalar(const Cyclotomic& z) {
  Cyclotomic s = z.simplified();
  if (s.is_rational()) return format_scalar(s.rational_value());
  // Highest power first, same layout as polynomials.
  std::string out;
  bool first = true;
  int terms = 0;
  const auto& c = s.coeffs();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Rational& ci = c[static_cast<std::size_t>(i)];
    if (ci.is_zero()) continue;
    ++terms;
    std::string mono = i == 0 ? "" : "zeta(" + std::to_string(s.conductor()) + "," + std::to_string(i) + ")";
    const bool neg = ci.sign() < 0;
    const Rational mag = neg ? -ci : ci;
    std::string body = mono.empty() ? mag.str() : (mag.is_one() ? mono : mag.str() + "*" + mono);
    if (first) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  if (terms == 1 && out[0] == '-') return {true, out.substr(1), true};
  return {false, out, terms == 1};
}

}  // namespace oh
