#pragma once

#include <span>

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

/// psi = (x3 - phi(x1 + i x2))^2 in Q(i)[x1,x2,x3], where
/// phi(z) = a0 + a1 z + ... + an z^n. The coefficients must be Qi scalars and
/// phi must be non-constant.
Poly khavinson_psi(std::span<const Scalar> phi_coeffs);

}  // namespace fischerlab
