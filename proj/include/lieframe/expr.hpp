#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lieframe/error.hpp"

namespace lieframe {

enum class ExprKind { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Call };

enum class ExprFunction { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };

std::string_view function_name(ExprFunction f);

/// Immutable expression tree in the single variable `s`.
struct ExprNode {
  ExprKind kind{ExprKind::Const};
  double value{0.0};                  ///< Const only
  ExprFunction function{ExprFunction::Sin};  ///< Call only
  std::vector<std::shared_ptr<const ExprNode>> children;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr make_const(double v);
ExprPtr make_var();
ExprPtr make_unary(ExprKind kind, ExprPtr operand);
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(ExprFunction f, ExprPtr arg);

/// Malformed input. Carries the byte offset and the tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, std::string name);
  std::size_t offset() const { return offset_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// Grammar, loosest to tightest: + -, * /, unary -, ^ (right associative).
ExprPtr parse_expr(std::string_view text);

/// Throws Error(DomainError) naming the first subexpression whose value is not finite.
double eval_expr(const ExprNode& ast, double s);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const ExprNode& ast);

bool structurally_equal(const ExprNode& a, const ExprNode& b);

}  // namespace lieframe
