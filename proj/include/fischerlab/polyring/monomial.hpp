#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fischerlab {

/// Exponent vector x1^e1 * ... * xd^ed.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial unit(std::size_t arity, std::size_t axis, Exponent power = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  /// Same arity required.
  Monomial operator*(const Monomial& o) const;
  /// True iff every exponent of *this is >= the matching one of o.
  bool divisible_by(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

/// Graded lex order with x1 < x2 < ... < xd: lower total degree first; within
/// one degree, a larger x1 exponent comes first (then x2, ...). Degree 2 in two
/// variables orders as x^2 < xy < y^2.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace fischerlab
