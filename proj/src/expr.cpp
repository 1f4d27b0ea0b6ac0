#include "oh/expr.hpp"

#include <cctype>
#include <functional>

namespace oh {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.m != b.m || a.k != b.k || a.exponent != b.exponent ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

ExprPtr make_num(const Rational& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Num;
  e->value = v;
  return e;
}

ExprPtr make_leaf(Expr::Kind kind) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  return e;
}

ExprPtr make_zeta(int m, int k) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Zeta;
  e->m = m;
  e->k = k;
  return e;
}

ExprPtr make_node(Expr::Kind kind, std::vector<ExprPtr> kids, int exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->kids = std::move(kids);
  e->exponent = exponent;
  return e;
}

namespace {

using K = Expr::Kind;
constexpr int kMaxExponent = 10000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr top() {
    skip();
    ExprPtr e;
    const std::size_t save = pos_;
    const std::string id = peek_ident();
    if (id == "sigma" || id == "tau")
      e = automorphism();
    else if (id == "deriv")
      e = derivation();
    else {
      pos_ = save;
      e = expr();
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string peek_ident() {
    skip();
    std::size_t p = pos_;
    if (p >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) return {};
    while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) ++p;
    return std::string(s_.substr(pos_, p - pos_));
  }

  std::string ident() {
    std::string id = peek_ident();
    pos_ += id.size();
    return id;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 5 || std::stoi(d) > kMaxExponent) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(d);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make_node(K::Add, {lhs, term()});
      else if (accept('-'))
        lhs = make_node(K::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (accept('*')) lhs = make_node(K::Mul, {lhs, unary()});
    return lhs;
  }

  ExprPtr unary() {
    if (accept('-')) return make_node(K::Neg, {unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (accept('^')) return make_node(K::Pow, {base}, small_int());
    return base;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      const std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const std::string den = digits();
        if (mpz_class(den) == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        num += "/" + den;
      } else {
        pos_ = save;
      }
      return make_num(Rational(mpq_class(num)));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    const std::size_t at = pos_;
    const std::string id = ident();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (id == "x") return make_leaf(K::X);
    if (id == "t") return make_leaf(K::T);
    if (id == "zeta") {
      expect('(');
      const int m = small_int();
      if (m < 1) fail("zeta order must be positive");
      expect(',');
      const int k = small_int();
      expect(')');
      return make_zeta(m, k);
    }
    throw UnknownSymbol(id, at);
  }

  ExprPtr automorphism() {
    std::vector<ExprPtr> items;
    do {
      skip();
      const std::size_t at = pos_;
      const std::string id = ident();
      expect('(');
      if (id == "sigma") {
        items.push_back(make_node(K::Sigma, {expr()}));
      } else if (id == "tau") {
        const std::size_t save = pos_;
        if (peek_ident() == "sym") {
          ident();
          skip();
          if (pos_ < s_.size() && s_[pos_] == ')') {
            items.push_back(make_node(K::Tau, {make_leaf(K::Sym)}));
            expect(')');
            continue;
          }
          pos_ = save;
        }
        items.push_back(make_node(K::Tau, {expr()}));
      } else {
        if (id.empty()) fail("expected sigma(...) or tau(...)");
        throw UnknownSymbol(id, at);
      }
      expect(')');
    } while (accept(';'));
    return items.size() == 1 ? items[0] : make_node(K::Compose, std::move(items));
  }

  ExprPtr derivation() {
    ident();
    expect('(');
    ExprPtr fields[3];
    do {
      skip();
      const std::size_t at = pos_;
      const std::string id = ident();
      int slot = id == "w" ? 0 : id == "H" ? 1 : id == "s" ? 2 : -1;
      if (slot < 0) {
        if (id.empty()) fail("expected w=, H= or s=");
        throw UnknownSymbol(id, at);
      }
      if (fields[slot]) {
        pos_ = at;
        fail("duplicate field '" + id + "'");
      }
      expect('=');
      fields[slot] = expr();
    } while (accept(','));
    expect(')');
    for (auto& f : fields)
      if (!f) f = make_num(Rational(0));
    return make_node(K::Deriv, {fields[0], fields[1], fields[2]});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int prec(const Expr& e) {
  switch (e.kind) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul: return 2;
    case K::Neg: return 3;
    case K::Pow: return 4;
    default: return 5;
  }
}

std::string print_at(const ExprPtr& e, int min_prec);

std::string print_raw(const ExprPtr& e) {
  switch (e->kind) {
    case K::Num: return e->value.str();
    case K::X: return "x";
    case K::T: return "t";
    case K::Sym: return "sym";
    case K::Zeta: return "zeta(" + std::to_string(e->m) + "," + std::to_string(e->k) + ")";
    case K::Neg: return "-" + print_at(e->kids[0], 3);
    case K::Add: return print_at(e->kids[0], 1) + " + " + print_at(e->kids[1], 2);
    case K::Sub: return print_at(e->kids[0], 1) + " - " + print_at(e->kids[1], 2);
    case K::Mul: return print_at(e->kids[0], 2) + "*" + print_at(e->kids[1], 3);
    case K::Pow: {
      const ExprPtr& b = e->kids[0];
      const bool wrap = prec(*b) < 5 || (b->kind == K::Num && !b->value.is_integer());
      return (wrap ? "(" + print_raw(b) + ")" : print_raw(b)) + "^" + std::to_string(e->exponent);
    }
    case K::Sigma: return "sigma(" + print_raw(e->kids[0]) + ")";
    case K::Tau: return "tau(" + print_raw(e->kids[0]) + ")";
    case K::Compose: {
      std::string out;
      for (const auto& k : e->kids) out += (out.empty() ? "" : ";") + print_raw(k);
      return out;
    }
    case K::Deriv:
      return "deriv(w=" + print_raw(e->kids[0]) + ", H=" + print_raw(e->kids[1]) + ", s=" + print_raw(e->kids[2]) + ")";
  }
  return {};
}

std::string print_at(const ExprPtr& e, int min_prec) {
  const std::string body = print_raw(e);
  return prec(*e) < min_prec ? "(" + body + ")" : body;
}

const CAlgebra& trivial_algebra() {
  static const CAlgebra ctx(CPoly{Cyclotomic(1L)});
  return ctx;
}

std::vector<ExprPtr> aut_items(const ExprPtr& e) {
  if (e->kind == K::Compose) return e->kids;
  if (e->kind == K::Sigma || e->kind == K::Tau) return {e};
  throw UsageError("expected an automorphism such as sigma(x^2);tau(2)");
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).top(); }

std::string print(const ExprPtr& e) { return print_raw(e); }

bool is_automorphism(const ExprPtr& e) {
  return e->kind == K::Compose || e->kind == K::Sigma || e->kind == K::Tau;
}

bool is_derivation(const ExprPtr& e) { return e->kind == K::Deriv; }

CElement to_element(const ExprPtr& e, const CAlgebra& ctx) {
  switch (e->kind) {
    case K::Num: return CElement::scalar(Cyclotomic(e->value));
    case K::X: return CElement::x();
    case K::T: return CElement::t();
    case K::Zeta: return CElement::scalar(Cyclotomic::zeta(e->m, e->k));
    case K::Neg: return -to_element(e->kids[0], ctx);
    case K::Add: return to_element(e->kids[0], ctx) + to_element(e->kids[1], ctx);
    case K::Sub: return to_element(e->kids[0], ctx) - to_element(e->kids[1], ctx);
    case K::Mul: return ore_mul(ctx, to_element(e->kids[0], ctx), to_element(e->kids[1], ctx));
    case K::Pow: return ore_pow(ctx, to_element(e->kids[0], ctx), e->exponent);
    case K::Sym: throw UsageError("'sym' is only allowed as tau(sym)");
    default: throw UsageError("expected an algebra element, got " + print(e));
  }
}

CPoly to_poly(const ExprPtr& e) {
  const CElement u = to_element(e, trivial_algebra());
  if (u.deg_t() > 0) throw UsageError("'t' is not allowed in a polynomial in x: " + print(e));
  return u.coeff(0);
}

namespace {
Cyclotomic to_unit(const ExprPtr& e) {
  const CPoly p = to_poly(e);
  if (p.degree() > 0) throw UsageError("tau needs a scalar, got " + print(e));
  if (p.is_zero()) throw DomainError("tau(0) is not an automorphism");
  return p[0];
}
}  // namespace

CAut to_automorphism(const ExprPtr& e, const CAlgebra& ctx) {
  const auto items = aut_items(e);
  std::optional<CAut> acc;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    const ExprPtr& item = *it;
    CAut rho;
    if (item->kind == K::Sigma) {
      rho = CAut::sigma(to_poly(item->kids[0]));
    } else {
      if (item->kids[0]->kind == K::Sym) throw UsageError("tau(sym) is not supported by this command");
      rho = CAut::tau(to_unit(item->kids[0]));
    }
    acc = acc ? compose(ctx, rho, *acc) : rho;
  }
  return *acc;
}

std::optional<CPoly> symbolic_shift(const ExprPtr& e) {
  const auto items = aut_items(e);
  bool any = false;
  for (const auto& item : items)
    if (item->kind == K::Tau && item->kids[0]->kind == K::Sym) any = true;
  if (!any) return std::nullopt;
  const ExprPtr& last = items.back();
  const bool shape = last->kind == K::Tau && last->kids[0]->kind == K::Sym &&
                     (items.size() == 1 || (items.size() == 2 && items[0]->kind == K::Sigma));
  if (!shape) throw UsageError("a symbolic automorphism must have the form sigma(r);tau(sym)");
  return items.size() == 2 ? to_poly(items[0]->kids[0]) : CPoly{};
}

CDeriv to_derivation(const ExprPtr& e, const CAlgebra& ctx) {
  if (e->kind != K::Deriv) throw UsageError("expected deriv(w=..., H=..., s=...)");
  return make_derivation(ctx, to_element(e->kids[0], ctx), to_element(e->kids[1], ctx), to_poly(e->kids[2]));
}

CElement parse_element(std::string_view text, const CAlgebra& ctx) { return to_element(parse(text), ctx); }
CPoly parse_poly(std::string_view text) { return to_poly(parse(text)); }
CAut parse_automorphism(std::string_view text, const CAlgebra& ctx) { return to_automorphism(parse(text), ctx); }
CDeriv parse_derivation(std::string_view text, const CAlgebra& ctx) { return to_derivation(parse(text), ctx); }

}  // namespace oh
