#include "fischerlab/fischer/fischer_theorem.hpp"

#include <algorithm>

#include "fischerlab/error.hpp"
#include "fischerlab/fischer/operator.hpp"
#include "fischerlab/linalg/elimination.hpp"

namespace fischerlab {

bool FischerTheoremReport::all_nonsingular() const {
  return std::all_of(slices.begin(), slices.end(),
                     [](const FischerSliceResult& s) { return s.nonsingular; });
}

FischerTheoremReport fischer_theorem_check(const Poly& p, int max_degree) {
  if (!p.is_homogeneous() || p.is_zero()) throw InvalidArgument("P must be a nonzero homogeneous polynomial");
  if (max_degree < 0) throw InvalidArgument("max degree must be >= 0");
  const FischerOperator op(p, p);
  FischerTheoremReport report{p, {}};
  for (int m = 0; m <= max_degree; ++m) {
    const Basis slice(p.arity(), Slice::homogeneous(m));
    const std::size_t r = rank(operator_matrix(op, slice, slice));
    report.slices.push_back({m, slice.size(), r, r == slice.size()});
  }
  return report;
}

}  // namespace fischerlab
