#include "fischerlab/linalg/elimination.hpp"

#include <utility>

#include "fischerlab/error.hpp"

namespace fischerlab {

namespace {

using Rows = std::vector<std::vector<Scalar>>;

Rows to_rows(const ExactMatrix& a, bool with_identity) {
  const std::size_t width = a.cols() + (with_identity ? a.rows() : 0);
  Rows rows(a.rows(), std::vector<Scalar>(width, Scalar::zero(a.field())));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
    if (with_identity) rows[r][a.cols() + r] = Scalar::one(a.field());
  }
  return rows;
}

// Eliminates on the first `pivot_width` columns of `rows`; row operations are
// applied across the full width. Returns the pivot columns.
std::vector<std::size_t> eliminate(Rows& rows, std::size_t pivot_width, bool reduce_above) {
  std::vector<std::size_t> pivots;
  const std::size_t n = rows.size();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < pivot_width && r < n; ++c) {
    std::size_t best = n;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      const std::size_t size = rows[i][c].bit_size();
      if (best == n || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best == n) continue;
    std::swap(rows[r], rows[best]);

    auto& pivot_row = rows[r];
    support.clear();
    for (std::size_t j = c; j < pivot_row.size(); ++j)
      if (!pivot_row[j].is_zero()) support.push_back(j);
    if (!pivot_row[c].is_one()) {
      const Scalar inv = pivot_row[c].inverse();
      for (auto j : support) pivot_row[j] *= inv;
    }

    for (std::size_t i = reduce_above ? 0 : r + 1; i < n; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar factor = rows[i][c];
      for (auto j : support) rows[i][j] -= factor * pivot_row[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const ExactMatrix& a) {
  Rows rows = to_rows(a, true);
  auto pivots = eliminate(rows, a.cols(), true);
  ExactMatrix reduced(a.rows(), a.cols(), a.field());
  ExactMatrix transform(a.rows(), a.rows(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) reduced.set(r, c, std::move(rows[r][c]));
    for (std::size_t c = 0; c < a.rows(); ++c)
      transform.set(r, c, std::move(rows[r][a.cols() + c]));
  }
  const std::size_t rk = pivots.size();
  return RrefResult{std::move(reduced), rk, std::move(pivots), std::move(transform)};
}

std::size_t rank(const ExactMatrix& a) {
  Rows rows = to_rows(a, false);
  return eliminate(rows, a.cols(), false).size();
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& a, std::span<const Scalar> b) {
  return LinearSystem(a).solve(b);
}

std::vector<std::vector<Scalar>> nullspace_basis(const ExactMatrix& a) {
  const RrefResult f = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : f.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
    v[free] = Scalar::one(a.field());
    for (std::size_t i = 0; i < f.rank; ++i) v[f.pivot_cols[i]] = -f.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> cokernel_witness(const ExactMatrix& a) {
  LinearSystem sys(a);
  auto units = sys.unreachable_units();
  if (units.empty()) return std::nullopt;
  std::vector<Scalar> e(a.rows(), Scalar::zero(a.field()));
  e[units.front()] = Scalar::one(a.field());
  return e;
}

LinearSystem::LinearSystem(const ExactMatrix& a) : a_(a), rref_(rref(a)) {}

bool LinearSystem::in_column_space(std::span<const Scalar> b) const {
  if (b.size() != a_.rows()) throw ArityMismatch("right-hand side length != rows");
  // Rows of the transform past the rank span the left null space.
  for (std::size_t r = rref_.rank; r < a_.rows(); ++r) {
    Scalar dot = Scalar::zero(a_.field());
    for (std::size_t j = 0; j < a_.rows(); ++j) {
      const Scalar& t = rref_.transform(r, j);
      if (!t.is_zero() && !b[j].is_zero()) dot += t * b[j];
    }
    if (!dot.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<Scalar>> LinearSystem::solve(std::span<const Scalar> b) const {
  if (!in_column_space(b)) return std::nullopt;
  std::vector<Scalar> x(a_.cols(), Scalar::zero(a_.field()));
  for (std::size_t i = 0; i < rref_.rank; ++i) {
    Scalar v = Scalar::zero(a_.field());
    for (std::size_t j = 0; j < a_.rows(); ++j) {
      const Scalar& t = rref_.transform(i, j);
      if (!t.is_zero() && !b[j].is_zero()) v += t * b[j];
    }
    x[rref_.pivot_cols[i]] = std::move(v);
  }
  const auto check = a_.apply(x);
  for (std::size_t r = 0; r < check.size(); ++r)
    if (!(check[r] == b[r])) throw Error("internal error: solution failed exact recheck");
  return x;
}

std::vector<std::size_t> LinearSystem::unreachable_units() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a_.rows(); ++j)
    for (std::size_t r = rref_.rank; r < a_.rows(); ++r)
      if (!rref_.transform(r, j).is_zero()) {
        out.push_back(j);
        break;
      }
  return out;
}

}  // namespace fischerlab
