#pragma once

#include <concepts>
#include <string>

#include "oh/errors.hpp"
#include "oh/rational.hpp"

namespace oh {

/// How a scalar wants to be printed as a coefficient: the sign is pulled out
/// so polynomial printers can join terms with " + " / " - ".
struct ScalarText {
  bool negative = false;
  std::string magnitude;  // text of |c| (or of c when sign is not meaningful)
  bool atomic = true;     // false if the text needs parentheses before "*"
};

inline ScalarText format_scalar(const Rational& r) {
  if (r.sign() < 0) return {true, (-r).str(), true};
  return {false, r.str(), true};
}

/// Exact field used as a coefficient domain throughout the library.
template <typename K>
concept Field = std::regular<K> && requires(const K& a, const K& b, long n) {
  { K(n) };
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { format_scalar(a) } -> std::convertible_to<ScalarText>;
};

/// a^e for any integer e (negative exponents invert).
template <Field K>
K power(const K& base, long e) {
  if (e < 0) return power(K(1) / base, -e);
  K result(1), b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

template <Field K>
std::string scalar_to_string(const K& c) {
  ScalarText st = format_scalar(c);
  std::string body = st.atomic ? st.magnitude : "(" + st.magnitude + ")";
  return st.negative ? "-" + body : body;
}

}  // namespace oh
