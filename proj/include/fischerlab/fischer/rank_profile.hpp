#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fischerlab/fischer/operator.hpp"

namespace fischerlab {

enum class ProfileMode { Homogeneous, Filtered };

/// One restricted map: source slice of degree source_degree against the
/// target slice of degree target_degree. `rank` is the dimension of the part
/// of the target slice reached by the image.
struct RankRow {
  int target_degree = 0;
  int source_degree = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t rank = 0;
  bool surjective_onto_target = false;
};

enum class VerdictKind {
  SurjectiveWithSlack,
  /// Filtered mode only: no slice up to the slack bound covers the target.
  Undetermined,
  /// Homogeneous mode only: conclusive rank deficiency at this degree.
  NotSurjective,
};

struct DegreeVerdict {
  int target_degree = 0;
  VerdictKind kind = VerdictKind::Undetermined;
  int slack = 0;
  /// A target monomial outside the range of the last slice tried.
  std::optional<Poly> witness;
};

struct RankProfile {
  Poly psi;
  ProfileMode mode;
  int max_target_degree = 0;
  int max_slack = 0;
  std::vector<RankRow> rows;
  std::vector<DegreeVerdict> verdicts;

  bool all_surjective() const;
};

/// Degree-wise surjectivity evidence for F_psi (or P(D)(psi .) in general).
///
/// Homogeneous mode needs homogeneous psi and P and checks
/// homogeneous(n - deg psi + deg P) -> homogeneous(n) for each n; the answer
/// is conclusive per degree. Filtered mode tries source degrees
/// n - deg psi + deg P + s for s = 0..slack and reports the first s whose image
/// contains filtered(n), or UNDETERMINED with a witness monomial.
/// Target degrees are processed concurrently.
RankProfile rank_profile(const FischerOperator& op, int max_target_degree, int slack,
                         ProfileMode mode);
RankProfile rank_profile(const Poly& psi, int max_target_degree, int slack, ProfileMode mode);

}  // namespace fischerlab
