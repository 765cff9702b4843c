#include "stolarsky/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>
#include <vector>

namespace stolarsky {

//----------------------------------------------------------------------
// Node construction
//----------------------------------------------------------------------

ExprPtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Const;
  n->value = v;
  return n;
}

ExprPtr make_var() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Var;
  return n;
}

ExprPtr make_node(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool is_total(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Const:
    case ExprKind::Var:
      return true;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
      return is_total(e->lhs) && is_total(e->rhs);
    case ExprKind::Neg:
      return is_total(e->lhs);
    case ExprKind::Exp:
      return is_total(e->lhs);
    case ExprKind::Pow: {
      if (e->rhs->kind != ExprKind::Const) return false;
      const double p = e->rhs->value;
      return p >= 0.0 && p == std::floor(p) && is_total(e->lhs);
    }
    case ExprKind::Div:
    case ExprKind::Log:
    case ExprKind::Sqrt:
      return false;
  }
  return false;
}

//----------------------------------------------------------------------
// Parser
//----------------------------------------------------------------------

namespace {

enum class Tok { Number, X, E, Pi, Log, Exp, Sqrt, Plus, Minus, Star, Slash,
                 Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  double value = 0.0;
};

constexpr const char* kAtomExpected =
    "a number, 'x', 'e', 'pi', 'log', 'exp', 'sqrt', '(' or '-'";

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) return {Tok::End, at};
    const char c = text_[pos_];
    switch (c) {
      case '+': ++pos_; return {Tok::Plus, at};
      case '-': ++pos_; return {Tok::Minus, at};
      case '*': ++pos_; return {Tok::Star, at};
      case '/': ++pos_; return {Tok::Slash, at};
      case '^': ++pos_; return {Tok::Caret, at};
      case '(': ++pos_; return {Tok::LParen, at};
      case ')': ++pos_; return {Tok::RParen, at};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return lex_number(at);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return lex_ident(at);
    }
    throw SyntaxError(at, kAtomExpected);
  }

 private:
  Token lex_number(std::size_t at) {
    std::size_t end = at;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() &&
          (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
      if (exp_end < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[exp_end]))) {
        ++exp_end;
        while (exp_end < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[exp_end]))) ++exp_end;
        end = exp_end;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + at, text_.data() + end, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + end) {
      throw SyntaxError(at, "a valid number");
    }
    pos_ = end;
    return {Tok::Number, at, v};
  }

  Token lex_ident(std::size_t at) {
    std::size_t end = at;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      ++end;
    }
    const std::string_view name = text_.substr(at, end - at);
    pos_ = end;
    if (name == "x") return {Tok::X, at};
    if (name == "e") return {Tok::E, at};
    if (name == "pi") return {Tok::Pi, at};
    if (name == "log") return {Tok::Log, at};
    if (name == "exp") return {Tok::Exp, at};
    if (name == "sqrt") return {Tok::Sqrt, at};
    throw SyntaxError(at, std::string("a known identifier (unknown '") +
                              std::string(name) + "'); one of " + kAtomExpected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (cur_.kind != Tok::End) {
      throw SyntaxError(cur_.offset, "an operator or end of input");
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool plus = cur_.kind == Tok::Plus;
      advance();
      e = make_node(plus ? ExprKind::Add : ExprKind::Sub, e, parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const bool mul = cur_.kind == Tok::Star;
      advance();
      e = make_node(mul ? ExprKind::Mul : ExprKind::Div, e, parse_factor());
    }
    return e;
  }

  // "-" binds looser than "^": -x^2 parses as -(x^2).
  ExprPtr parse_factor() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return make_node(ExprKind::Neg, parse_factor());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (cur_.kind == Tok::Caret) {
      advance();
      return make_node(ExprKind::Pow, base, parse_factor());  // right-assoc
    }
    return base;
  }

  ExprPtr parse_atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        const double v = cur_.value;
        advance();
        return make_const(v);
      }
      case Tok::X:
        advance();
        return make_var();
      case Tok::E:
        advance();
        return make_const(std::numbers::e);
      case Tok::Pi:
        advance();
        return make_const(std::numbers::pi);
      case Tok::Log:
      case Tok::Exp:
      case Tok::Sqrt: {
        const Tok f = cur_.kind;
        advance();
        expect(Tok::LParen, "'(' after function name");
        ExprPtr arg = parse_expr();
        expect(Tok::RParen, "')'");
        const ExprKind kind = f == Tok::Log   ? ExprKind::Log
                              : f == Tok::Exp ? ExprKind::Exp
                                              : ExprKind::Sqrt;
        return make_node(kind, arg);
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError(cur_.offset, kAtomExpected);
    }
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) throw SyntaxError(cur_.offset, what);
    advance();
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0};
};

}  // namespace

ExprPtr parse(std::string_view text) {
  if (text.empty()) throw SyntaxError(0, "a non-empty expression");
  return Parser(text).run();
}

//----------------------------------------------------------------------
// Evaluation
//----------------------------------------------------------------------

namespace {

double check_finite(double v) {
  if (!std::isfinite(v)) throw OverflowError("expression value overflowed");
  return v;
}

double eval_pow(double base, double expo) {
  if (base > 0.0) return std::pow(base, expo);
  if (base == 0.0) {
    if (expo > 0.0) return 0.0;
    if (expo == 0.0) return 1.0;
    throw DomainError("zero raised to a negative power");
  }
  if (expo == std::floor(expo)) return std::pow(base, expo);
  throw DomainError("negative base raised to a fractional power");
}

}  // namespace

double evaluate(const ExprPtr& e, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("evaluation point must be finite and positive");
  }
  switch (e->kind) {
    case ExprKind::Const:
      return e->value;
    case ExprKind::Var:
      return x;
    case ExprKind::Add:
      return check_finite(evaluate(e->lhs, x) + evaluate(e->rhs, x));
    case ExprKind::Sub:
      return check_finite(evaluate(e->lhs, x) - evaluate(e->rhs, x));
    case ExprKind::Mul:
      return check_finite(evaluate(e->lhs, x) * evaluate(e->rhs, x));
    case ExprKind::Div: {
      const double num = evaluate(e->lhs, x);
      const double den = evaluate(e->rhs, x);
      if (den == 0.0) throw DomainError("division by zero");
      return check_finite(num / den);
    }
    case ExprKind::Pow:
      return check_finite(eval_pow(evaluate(e->lhs, x), evaluate(e->rhs, x)));
    case ExprKind::Neg:
      return -evaluate(e->lhs, x);
    case ExprKind::Log: {
      const double v = evaluate(e->lhs, x);
      if (!(v > 0.0)) throw DomainError("log of a non-positive value");
      return check_finite(std::log(v));
    }
    case ExprKind::Exp:
      return check_finite(std::exp(evaluate(e->lhs, x)));
    case ExprKind::Sqrt: {
      const double v = evaluate(e->lhs, x);
      if (v < 0.0) throw DomainError("sqrt of a negative value");
      return std::sqrt(v);
    }
  }
  throw Error("evaluate: corrupt node");
}

//----------------------------------------------------------------------
// Differentiation with conservative simplification
//----------------------------------------------------------------------

namespace {

bool is_const(const ExprPtr& e, double v) {
  return e->kind == ExprKind::Const && e->value == v;
}

ExprPtr s_add(ExprPtr l, ExprPtr r);
ExprPtr s_sub(ExprPtr l, ExprPtr r);
ExprPtr s_mul(ExprPtr l, ExprPtr r);
ExprPtr s_div(ExprPtr l, ExprPtr r);
ExprPtr s_neg(ExprPtr c);

ExprPtr s_add(ExprPtr l, ExprPtr r) {
  if (is_const(l, 0.0)) return r;
  if (is_const(r, 0.0)) return l;
  if (l->kind == ExprKind::Const && r->kind == ExprKind::Const) {
    return make_const(l->value + r->value);
  }
  return make_node(ExprKind::Add, std::move(l), std::move(r));
}

ExprPtr s_sub(ExprPtr l, ExprPtr r) {
  if (is_const(r, 0.0)) return l;
  if (is_const(l, 0.0)) return s_neg(std::move(r));
  if (l->kind == ExprKind::Const && r->kind == ExprKind::Const) {
    return make_const(l->value - r->value);
  }
  return make_node(ExprKind::Sub, std::move(l), std::move(r));
}

ExprPtr s_mul(ExprPtr l, ExprPtr r) {
  // 0*e -> 0 only when e cannot raise a domain error.
  if (is_const(l, 0.0) && is_total(r)) return l;
  if (is_const(r, 0.0) && is_total(l)) return r;
  if (is_const(l, 1.0)) return r;
  if (is_const(r, 1.0)) return l;
  if (l->kind == ExprKind::Const && r->kind == ExprKind::Const) {
    return make_const(l->value * r->value);
  }
  return make_node(ExprKind::Mul, std::move(l), std::move(r));
}

ExprPtr s_div(ExprPtr l, ExprPtr r) {
  if (is_const(r, 1.0)) return l;
  if (l->kind == ExprKind::Const && r->kind == ExprKind::Const &&
      r->value != 0.0) {
    return make_const(l->value / r->value);
  }
  return make_node(ExprKind::Div, std::move(l), std::move(r));
}

ExprPtr s_neg(ExprPtr c) {
  if (c->kind == ExprKind::Const) return make_const(-c->value);
  if (c->kind == ExprKind::Neg) return c->lhs;
  return make_node(ExprKind::Neg, std::move(c));
}

ExprPtr s_pow(ExprPtr base, ExprPtr expo) {
  if (is_const(expo, 1.0)) return base;
  if (is_const(expo, 0.0) && is_total(base)) return make_const(1.0);
  if (base->kind == ExprKind::Const && expo->kind == ExprKind::Const &&
      base->value > 0.0) {
    return make_const(std::pow(base->value, expo->value));
  }
  return make_node(ExprKind::Pow, std::move(base), std::move(expo));
}

ExprPtr derivative(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Const:
      return make_const(0.0);
    case ExprKind::Var:
      return make_const(1.0);
    case ExprKind::Add:
      return s_add(derivative(e->lhs), derivative(e->rhs));
    case ExprKind::Sub:
      return s_sub(derivative(e->lhs), derivative(e->rhs));
    case ExprKind::Mul:
      return s_add(s_mul(derivative(e->lhs), e->rhs),
                   s_mul(e->lhs, derivative(e->rhs)));
    case ExprKind::Div:
      return s_div(s_sub(s_mul(derivative(e->lhs), e->rhs),
                         s_mul(e->lhs, derivative(e->rhs))),
                   s_mul(e->rhs, e->rhs));
    case ExprKind::Neg:
      return s_neg(derivative(e->lhs));
    case ExprKind::Log:
      return s_div(derivative(e->lhs), e->lhs);
    case ExprKind::Exp:
      return s_mul(e, derivative(e->lhs));
    case ExprKind::Sqrt:
      return s_div(derivative(e->lhs), s_mul(make_const(2.0), e));
    case ExprKind::Pow: {
      if (e->rhs->kind == ExprKind::Const) {
        const double p = e->rhs->value;
        return s_mul(s_mul(make_const(p), s_pow(e->lhs, make_const(p - 1.0))),
                     derivative(e->lhs));
      }
      // u^v = exp(v log u) for non-constant exponents.
      ExprPtr rewritten = make_node(
          ExprKind::Exp, make_node(ExprKind::Mul, e->rhs,
                                   make_node(ExprKind::Log, e->lhs)));
      return derivative(rewritten);
    }
  }
  throw Error("differentiate: corrupt node");
}

}  // namespace

ExprPtr differentiate(const ExprPtr& e) { return derivative(e); }

//----------------------------------------------------------------------
// Printing
//----------------------------------------------------------------------

namespace {

// Higher binds tighter; matches the parser.
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_rec(const ExprPtr& e, std::string& out);

void print_child(const ExprPtr& child, int parent_prec, bool needs_paren_at_eq,
                 std::string& out) {
  const int cp = precedence(child->kind);
  const bool paren = cp < parent_prec || (cp == parent_prec && needs_paren_at_eq);
  if (paren) out += '(';
  print_rec(child, out);
  if (paren) out += ')';
}

void print_rec(const ExprPtr& e, std::string& out) {
  switch (e->kind) {
    case ExprKind::Const: {
      const double v = e->value;
      if (v < 0.0 || (v == 0.0 && std::signbit(v))) {
        out += '(';
        out += format_number(v);
        out += ')';
      } else {
        out += format_number(v);
      }
      return;
    }
    case ExprKind::Var:
      out += 'x';
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      const char op = e->kind == ExprKind::Add   ? '+'
                      : e->kind == ExprKind::Sub ? '-'
                      : e->kind == ExprKind::Mul ? '*'
                                                 : '/';
      const int p = precedence(e->kind);
      print_child(e->lhs, p, false, out);
      out += op;
      // Left-associative: a-(b-c) and a/(b/c) keep their parentheses.
      const bool rparen = e->kind == ExprKind::Sub || e->kind == ExprKind::Div;
      print_child(e->rhs, p, rparen, out);
      return;
    }
    case ExprKind::Pow: {
      // "^" consumes a full factor on the right, so a Neg exponent needs no
      // parentheses; a Neg or Pow base does.
      print_child(e->lhs, precedence(ExprKind::Pow), true, out);
      out += '^';
      const int cp = precedence(e->rhs->kind);
      const bool paren = cp < precedence(ExprKind::Neg);
      if (paren) out += '(';
      print_rec(e->rhs, out);
      if (paren) out += ')';
      return;
    }
    case ExprKind::Neg:
      out += '-';
      print_child(e->lhs, precedence(ExprKind::Neg), false, out);
      return;
    case ExprKind::Log:
    case ExprKind::Exp:
    case ExprKind::Sqrt: {
      out += e->kind == ExprKind::Log   ? "log"
             : e->kind == ExprKind::Exp ? "exp"
                                        : "sqrt";
      out += '(';
      print_rec(e->lhs, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

}  // namespace stolarsky
