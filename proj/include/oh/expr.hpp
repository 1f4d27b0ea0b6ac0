#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oh/deriv.hpp"

namespace oh {

/// Syntax tree of the textual front end.
///
///   expr    := term (('+'|'-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INT)?
///   primary := NUM ('/' NUM)? | 'x' | 't' | 'zeta(' INT ',' INT ')' | '(' expr ')'
///
///   aut     := item (';' item)*      item := 'sigma(' expr ')' | 'tau(' expr | 'sym' ')'
///   deriv   := 'deriv(' field (',' field)* ')'   field := ('w'|'H'|'s') '=' expr
///
/// Products keep their left-to-right order; there is no implicit
/// multiplication.
struct Expr {
  enum class Kind { Num, X, T, Zeta, Sym, Neg, Add, Sub, Mul, Pow, Sigma, Tau, Compose, Deriv };

  Kind kind = Kind::Num;
  Rational value;            // Num (nonnegative)
  int m = 1, k = 0;          // Zeta
  int exponent = 0;          // Pow
  std::vector<std::shared_ptr<const Expr>> kids;

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_num(const Rational& v);
ExprPtr make_leaf(Expr::Kind kind);
ExprPtr make_zeta(int m, int k);
ExprPtr make_node(Expr::Kind kind, std::vector<ExprPtr> kids, int exponent = 0);

/// Parses any of the three forms (ring expression, automorphism, derivation).
ExprPtr parse(std::string_view text);

/// Minimal-parenthesis text; parse(print(e)) == e.
std::string print(const ExprPtr& e);

bool is_automorphism(const ExprPtr& e);
bool is_derivation(const ExprPtr& e);

using CAlgebra = AlgebraContext<Cyclotomic>;
using CElement = OreElement<Cyclotomic>;
using CPoly = Poly<Cyclotomic>;
using CAut = Automorphism<Cyclotomic>;
using CDeriv = Derivation<Cyclotomic>;

CElement to_element(const ExprPtr& e, const CAlgebra& ctx);
/// Rejects anything involving t.
CPoly to_poly(const ExprPtr& e);
CAut to_automorphism(const ExprPtr& e, const CAlgebra& ctx);
CDeriv to_derivation(const ExprPtr& e, const CAlgebra& ctx);

/// "[sigma(r);]tau(sym)": the r of a symbolic automorphism, nullopt when the
/// expression has no symbolic unit.
std::optional<CPoly> symbolic_shift(const ExprPtr& e);

CElement parse_element(std::string_view text, const CAlgebra& ctx);
CPoly parse_poly(std::string_view text);
CAut parse_automorphism(std::string_view text, const CAlgebra& ctx);
CDeriv parse_derivation(std::string_view text, const CAlgebra& ctx);

}  // namespace oh
