#pragma once

#include "fischerlab/linalg/matrix.hpp"
#include "fischerlab/polyring/basis.hpp"
#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

/// The linear map q -> P(D)(psi * q). With the default operator |x|^2 this is
/// the Fischer operator q -> Lap(psi * q).
class FischerOperator {
 public:
  /// Throws InvalidArgument when psi is constant.
  explicit FischerOperator(Poly psi);
  /// Throws InvalidArgument when psi or op is constant, or on a mismatch.
  FischerOperator(Poly psi, Poly op);

  const Poly& psi() const noexcept { return psi_; }
  const Poly& op() const noexcept { return op_; }
  std::size_t arity() const noexcept { return psi_.arity(); }
  Field field() const noexcept { return psi_.field(); }
  int psi_degree() const { return psi_.degree().value(); }
  /// Total degree of P.
  int op_degree() const { return op_.degree().value(); }
  /// Lowest total degree among the terms of P.
  int op_low_degree() const { return op_.terms().begin()->first.degree(); }
  bool is_laplacian() const;

  /// Every image of a degree <= m polynomial has degree <= this bound.
  int image_degree_bound(int source_degree) const {
    return source_degree + psi_degree() - op_low_degree();
  }

  Poly apply(const Poly& q) const;

 private:
  Poly psi_;
  Poly op_;
};

Poly fischer_apply(const FischerOperator& op, const Poly& q);

/// Column j holds the target coordinates of op(source[j]). Throws
/// BasisOverflow if some image monomial is not in the target basis.
ExactMatrix operator_matrix(const FischerOperator& op, const Basis& source, const Basis& target);

}  // namespace fischerlab
