#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab::cli {

/// Parsed polynomial expression.
struct Expr {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Constant;
  std::size_t position = 0;  // offset of the node in the source text
  Scalar constant;           // Constant
  std::size_t variable = 0;  // Variable
  unsigned exponent = 0;     // Pow
  std::unique_ptr<Expr> lhs; // unary operand or left operand
  std::unique_ptr<Expr> rhs;
};

/// Grammar (whitespace-insensitive, no implicit multiplication):
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := atom ('^' uint)?
///   atom   := uint | 'i' | name | '(' expr ')'
///
/// A rational literal p/q is a division of integers; any divisor must lower
/// to a nonzero constant. 'i' is the imaginary unit and only valid over Qi.
/// Throws ParseError (with offset) or UnknownVariable.
std::unique_ptr<Expr> parse_expression(std::string_view text,
                                       const std::vector<std::string>& vars, Field field);

/// Lowers an AST to its canonical polynomial. Throws ParseError on division
/// by a non-constant or zero expression.
Poly lower(const Expr& e, std::size_t arity, Field field);

Poly parse_polynomial(std::string_view text, const std::vector<std::string>& vars, Field field);

/// x, y, z for arity <= 3, else x1..xd.
std::vector<std::string> default_variable_names(std::size_t arity);

/// Terms by descending total degree, and within a degree the larger x1
/// exponent first: "x^2 + y^2 - 1", "0" for the zero polynomial.
/// parse_polynomial(format_polynomial(p, v), v, field) == p.
std::string format_polynomial(const Poly& p, const std::vector<std::string>& vars);
std::string format_polynomial(const Poly& p);
std::string format_scalar(const Scalar& s);

}  // namespace fischerlab::cli
