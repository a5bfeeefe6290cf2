#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fischerlab/linalg/matrix.hpp"

namespace fischerlab {

/// Reduced row echelon form with the accumulated row operations:
/// transform * original == rref.
struct RrefResult {
  ExactMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  ExactMatrix transform;
};

/// Exact Gauss-Jordan elimination. In each column the pivot is the eligible
/// entry of smallest bit size (numerator + denominator), ties to the lowest row.
RrefResult rref(const ExactMatrix& a);

/// Rank by forward elimination only; no transform is accumulated.
std::size_t rank(const ExactMatrix& a);

/// One solution of a x = b with free variables set to zero, or nullopt when
/// b is outside the column space. Every returned x is rechecked exactly.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& a, std::span<const Scalar> b);

/// Basis of {v : a v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace_basis(const ExactMatrix& a);

/// A unit vector e_j outside the column space when rank < rows, else nullopt.
std::optional<std::vector<Scalar>> cokernel_witness(const ExactMatrix& a);

/// Factored system for repeated right-hand sides against one matrix.
class LinearSystem {
 public:
  explicit LinearSystem(const ExactMatrix& a);

  const ExactMatrix& matrix() const noexcept { return a_; }
  const RrefResult& factorization() const noexcept { return rref_; }
  std::size_t rank() const noexcept { return rref_.rank; }

  bool in_column_space(std::span<const Scalar> b) const;
  std::optional<std::vector<Scalar>> solve(std::span<const Scalar> b) const;
  /// Indices j with e_j outside the column space.
  std::vector<std::size_t> unreachable_units() const;

 private:
  ExactMatrix a_;
  RrefResult rref_;
};

}  // namespace fischerlab
