#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fischerlab/polyring/degree.hpp"
#include "fischerlab/polyring/monomial.hpp"
#include "fischerlab/polyring/scalar.hpp"

namespace fischerlab {

/// Sparse multivariate polynomial over Q or Q(i) with fixed arity.
///
/// Terms are kept in graded lex order and no stored coefficient is ever zero,
/// so two equal polynomials always have identical term maps.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexLess>;

  /// The zero polynomial.
  Poly(std::size_t arity, Field field);

  static Poly constant(std::size_t arity, const Scalar& c);
  static Poly variable(std::size_t arity, Field field, std::size_t axis);
  static Poly term(const Monomial& m, const Scalar& c);
  /// Sums repeated monomials and drops zeros.
  static Poly from_terms(std::size_t arity, Field field,
                         const std::vector<std::pair<Monomial, Scalar>>& terms);
  /// x1^2 + ... + xd^2.
  static Poly squared_norm(std::size_t arity, Field field);

  std::size_t arity() const noexcept { return arity_; }
  Field field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Degree degree() const;
  bool is_homogeneous() const;
  /// Zero when m is absent.
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }
  friend Poly operator*(Poly p, const Scalar& c) { return p *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  /// Throws ArityMismatch / FieldMismatch when o is incompatible.
  void require_compatible(const Poly& o) const;

 private:
  std::size_t arity_;
  Field field_;
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Scalar& c, const Poly& p);
Poly pow(const Poly& p, unsigned exponent);

/// d/dx_axis, with axis 0-based.
Poly partial_derivative(const Poly& p, std::size_t axis);
/// Mixed partial d^alpha p.
Poly mixed_partial(const Poly& p, const Monomial& alpha);
Poly laplacian(const Poly& p);
/// P(D) p: each monomial x^alpha of P becomes the mixed partial d^alpha.
Poly apply_operator(const Poly& op, const Poly& p);

/// Sum of the terms of total degree n.
Poly homogeneous_component(const Poly& p, int n);

/// Floating-point evaluation; p must be over Q.
double evaluate(const Poly& p, std::span<const double> point);
/// Exact evaluation at a point of scalars from p's field.
Scalar evaluate_exact(const Poly& p, std::span<const Scalar> point);

}  // namespace fischerlab
