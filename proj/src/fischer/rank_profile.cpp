#include "fischerlab/fischer/rank_profile.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <utility>

#include "fischerlab/error.hpp"
#include "fischerlab/linalg/elimination.hpp"

namespace fischerlab {

namespace {

struct DegreeResult {
  std::vector<RankRow> rows;
  DegreeVerdict verdict;
};

Poly monomial_poly(const Monomial& m, Field field) {
  return Poly::term(m, Scalar::one(field));
}

DegreeResult homogeneous_degree(const FischerOperator& op, int n) {
  DegreeResult out;
  const int m = n - op.psi_degree() + op.op_degree();
  const Basis target(op.arity(), Slice::homogeneous(n));
  RankRow row{n, m, slice_dimension(op.arity(), Slice::homogeneous(m)), target.size(), 0, false};
  std::optional<Poly> witness;
  if (m >= 0) {
    const Basis source(op.arity(), Slice::homogeneous(m));
    const ExactMatrix a = operator_matrix(op, source, target);
    row.rank = rank(a);
    if (row.rank < target.size()) {
      const auto units = LinearSystem(a).unreachable_units();
      witness = monomial_poly(target[units.front()], op.field());
    }
  } else {
    witness = monomial_poly(target[0], op.field());
  }
  row.surjective_onto_target = row.rank == row.dim_target;
  out.rows.push_back(row);
  out.verdict.target_degree = n;
  if (row.surjective_onto_target) {
    out.verdict.kind = VerdictKind::SurjectiveWithSlack;
  } else {
    out.verdict.kind = VerdictKind::NotSurjective;
    out.verdict.witness = std::move(witness);
  }
  return out;
}

DegreeResult filtered_degree(const FischerOperator& op, int n, int slack) {
  DegreeResult out;
  out.verdict.target_degree = n;
  const std::size_t dim_target = slice_dimension(op.arity(), Slice::filtered(n));
  const int base = n - op.psi_degree() + op.op_degree();
  for (int s = 0; s <= slack; ++s) {
    const int m = base + s;
    RankRow row{n, m, slice_dimension(op.arity(), Slice::filtered(m)), dim_target, 0, false};
    if (m >= 0) {
      const Basis source(op.arity(), Slice::filtered(m));
      // filtered(n) is a prefix of the graded image basis, so its rows come first.
      const Basis image(op.arity(), Slice::filtered(std::max(op.image_degree_bound(m), n)));
      const ExactMatrix a = operator_matrix(op, source, image);
      std::vector<std::size_t> target_rows(dim_target);
      std::iota(target_rows.begin(), target_rows.end(), std::size_t{0});
      // dim(range ∩ target) = rank(A) - rank(A with the target rows removed)
      row.rank = rank(a) - rank(a.without_rows(target_rows));
      row.surjective_onto_target = row.rank == dim_target;
      if (!row.surjective_onto_target && s == slack) {
        const auto units = LinearSystem(a).unreachable_units();
        out.verdict.witness = monomial_poly(image[units.front()], op.field());
      }
    } else if (s == slack) {
      out.verdict.witness =
          monomial_poly(Monomial(op.arity()), op.field());
    }
    out.rows.push_back(row);
    if (row.surjective_onto_target) {
      out.verdict.kind = VerdictKind::SurjectiveWithSlack;
      out.verdict.slack = s;
      return out;
    }
  }
  out.verdict.kind = VerdictKind::Undetermined;
  out.verdict.slack = slack;
  return out;
}

}  // namespace

bool RankProfile::all_surjective() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const DegreeVerdict& v) {
    return v.kind == VerdictKind::SurjectiveWithSlack;
  });
}

RankProfile rank_profile(const FischerOperator& op, int max_target_degree, int slack,
                         ProfileMode mode) {
  if (max_target_degree < 0) throw InvalidArgument("max target degree must be >= 0");
  if (slack < 0) throw InvalidArgument("slack must be >= 0");
  if (mode == ProfileMode::Homogeneous && (!op.psi().is_homogeneous() || !op.op().is_homogeneous()))
    throw InvalidArgument("homogeneous mode requires a homogeneous psi and operator");

  std::vector<std::future<DegreeResult>> jobs;
  jobs.reserve(static_cast<std::size_t>(max_target_degree) + 1);
  for (int n = 0; n <= max_target_degree; ++n) {
    jobs.push_back(std::async(std::launch::async, [&op, n, slack, mode] {
      return mode == ProfileMode::Homogeneous ? homogeneous_degree(op, n)
                                              : filtered_degree(op, n, slack);
    }));
  }

  RankProfile profile{op.psi(), mode, max_target_degree, slack, {}, {}};
  for (auto& job : jobs) {
    DegreeResult r = job.get();
    profile.rows.insert(profile.rows.end(), r.rows.begin(), r.rows.end());
    profile.verdicts.push_back(std::move(r.verdict));
  }
  return profile;
}

RankProfile rank_profile(const Poly& psi, int max_target_degree, int slack, ProfileMode mode) {
  return rank_profile(FischerOperator(psi), max_target_degree, slack, mode);
}

}  // namespace fischerlab
