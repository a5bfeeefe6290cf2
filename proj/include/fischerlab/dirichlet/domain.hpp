#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

/// Region bounded by the real zero set of a degree-2 polynomial psi over Q,
/// oriented so that psi < 0 at the given interior point.
class QuadricDomain {
 public:
  /// Throws InvalidArgument unless deg psi == 2, psi is over Q, the point has
  /// the right length and psi(interior_point) < 0.
  QuadricDomain(Poly psi, std::vector<double> interior_point);

  /// psi = sum x_i^2 / a_i^2 - 1 with the origin as interior point.
  static QuadricDomain ellipsoid(std::span<const mpq_class> semi_axes);

  const Poly& psi() const noexcept { return psi_; }
  const std::vector<double>& interior_point() const noexcept { return interior_; }
  std::size_t arity() const noexcept { return psi_.arity(); }

  /// True iff psi = c (sum x_i^2 / a_i^2 - 1) for some c > 0.
  bool is_ellipsoidal() const noexcept { return !semi_axes_squared_.empty(); }
  /// a_i^2 per axis; empty when the domain is not ellipsoidal.
  const std::vector<mpq_class>& semi_axes_squared() const noexcept { return semi_axes_squared_; }

 private:
  Poly psi_;
  std::vector<double> interior_;
  std::vector<mpq_class> semi_axes_squared_;
};

}  // namespace fischerlab
