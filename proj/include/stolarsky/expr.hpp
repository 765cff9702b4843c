#ifndef STOLARSKY_EXPR_HPP_
#define STOLARSKY_EXPR_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "stolarsky/errors.hpp"

namespace stolarsky {

//======================================================================
// Expressions in one variable x on (0, inf).
//
// Grammar (whitespace insignificant; ^ right-associative, binding tighter
// than unary minus, which binds tighter than * and /):
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-" factor | power
//   power  := atom ("^" factor)?
//   atom   := NUMBER | "x" | "e" | "pi" | FUNC "(" expr ")" | "(" expr ")"
//   FUNC   := "log" | "exp" | "sqrt"
//
// ASTs are immutable; sharing subtrees is safe and differentiation exploits
// it.  Simplification is conservative: no rewrite may turn an expression
// that raises a domain error somewhere into one that does not (so x/x is
// never folded to 1, and 0*e folds only when e is total).
//======================================================================

enum class ExprKind {
  Const, Var, Add, Sub, Mul, Div, Pow, Neg, Log, Exp, Sqrt,
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  double value = 0.0;  // Const only
  ExprPtr lhs;         // first child (unary ops use lhs only)
  ExprPtr rhs;
};

// Raw node factories (no simplification; used by the parser).
ExprPtr make_const(double v);
ExprPtr make_var();
ExprPtr make_node(ExprKind kind, ExprPtr lhs, ExprPtr rhs = nullptr);

// Parse `text` per the grammar above.  Throws SyntaxError (with byte offset
// and the expected-token set) on malformed input or unknown identifiers.
ExprPtr parse(std::string_view text);

// Evaluate at x > 0.  Throws DomainError (log/sqrt of non-positive,
// division by zero, zero to a negative power, negative base to a fractional
// power) or OverflowError when a node value leaves the finite range.
double evaluate(const ExprPtr& e, double x);

// Symbolic derivative with constant folding and 0/1 identities.  Powers
// with non-constant exponents are rewritten through exp(v log u) first.
ExprPtr differentiate(const ExprPtr& e);

// Render with minimal parentheses; parse(to_string(e)) reproduces the same
// rendering, so print-parse round trips are idempotent at the string level.
std::string to_string(const ExprPtr& e);

// True when evaluation can never raise a domain error for x > 0: no Div,
// Log or Sqrt, and only constant non-negative integer exponents.
bool is_total(const ExprPtr& e);

}  // namespace stolarsky

#endif  // STOLARSKY_EXPR_HPP_
