#pragma once

#include <cstddef>
#include <vector>

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

struct FischerSliceResult {
  int degree = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool nonsingular = false;
};

struct FischerTheoremReport {
  Poly p;
  std::vector<FischerSliceResult> slices;

  bool all_nonsingular() const;
};

/// For m = 0..max_degree, the square matrix of q -> P(D)(P q) on
/// homogeneous(m) and whether it is nonsingular. P must be homogeneous and
/// non-constant.
FischerTheoremReport fischer_theorem_check(const Poly& p, int max_degree);

}  // namespace fischerlab
