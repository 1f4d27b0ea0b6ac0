#include "oh/rational_function.hpp"

namespace oh {

RationalFunction::RationalFunction(Poly<Rational> num, Poly<Rational> den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly<Rational>::constant(Rational(1));
    return;
  }
  Poly<Rational> g = poly_gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  const Rational lc = den.leading();
  num_ = lc.inverse() * num;
  den_ = lc.inverse() * den;
}

RationalFunction RationalFunction::parameter() {
  return {Poly<Rational>::x(), Poly<Rational>::constant(Rational(1))};
}

bool RationalFunction::is_laurent() const {
  return den_ == Poly<Rational>::monomial(Rational(1), den_.degree());
}

Cyclotomic RationalFunction::evaluate(const Cyclotomic& at) const {
  auto eval = [&](const Poly<Rational>& p) {
    Cyclotomic acc(0L);
    for (int i = p.degree(); i >= 0; --i) acc = acc * at + Cyclotomic(p[i]);
    return acc;
  };
  Cyclotomic d = eval(den_);
  if (d.is_zero()) throw DomainError("rational function has a pole at " + at.str());
  return eval(num_) / d;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return {x.num_ * y.num_, x.den_ * y.den_};
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

std::string RationalFunction::str() const { return scalar_to_string(*this); }

ScalarText format_scalar(const RationalFunction& f) {
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  if (d.degree() == 0) {
    if (n.degree() <= 0) return format_scalar(n[0]);
    if (support(n).size() == 1) {
      ScalarText st = format_scalar(n.leading());
      std::string mono = n.degree() == 1 ? "a" : "a^" + std::to_string(n.degree());
      return {st.negative, st.magnitude == "1" ? mono : st.magnitude + "*" + mono, true};
    }
    return {false, to_string(n, "a"), false};
  }
  auto wrap = [](const Poly<Rational>& p) {
    std::string s = to_string(p, "a");
    return support(p).size() > 1 ? "(" + s + ")" : s;
  };
  return {false, wrap(n) + "/" + wrap(d), false};
}

Poly<Cyclotomic> evaluate_at(const Poly<RationalFunction>& p, const Cyclotomic& a) {
  return p.map([&](const RationalFunction& c) { return c.evaluate(a); });
}

}  // namespace oh
