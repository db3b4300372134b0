#ifndef LSB_EXPR_HPP
#define LSB_EXPR_HPP

#include <memory>
#include <set>
#include <string>

#include "lsb/lexer.hpp"
#include "lsb/multipoly.hpp"

namespace lsb {

// Arithmetic over numbers, `i`, and named variables: + - * / ^ and parentheses.
struct Expr {
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Num;
  GScalar num;
  std::string name;
  long power = 0;
  std::shared_ptr<const Expr> a, b;
  SourcePos pos;
};
using ExprPtr = std::shared_ptr<const Expr>;

struct ExprError : std::invalid_argument {
  ExprError(const std::string& msg, SourcePos p) : std::invalid_argument(msg), pos(p) {}
  SourcePos pos;
};

// Reads the longest expression at the stream position.
ExprPtr parse_expression(TokenStream& ts);
// Whole text must be one expression.
ExprPtr parse_expression(const std::string& text);

// Polynomial value; division only by nonzero constants, powers must be >= 0.
MultiPoly to_poly(const Expr& e);
// Value at an assignment; throws ExprError on a missing variable or zero divisor.
GScalar eval(const Expr& e, const Assignment& at);
std::set<std::string> variables(const Expr& e);
// Minimal parentheses; parse_expression(expr_str(e)) evaluates like e.
std::string expr_str(const Expr& e);

}  // namespace lsb

#endif
