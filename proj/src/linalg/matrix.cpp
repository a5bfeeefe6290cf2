#include "fischerlab/linalg/matrix.hpp"

#include <algorithm>
#include <string>

#include "fischerlab/error.hpp"

namespace fischerlab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, Field field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArityMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  s.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = s.emplace_back();
    for (long v : row) out.push_back(Scalar::from_int(field, v));
  }
  return from_rows(field, s);
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (value.field() != field_) throw FieldMismatch("matrix entry field mismatch");
  data_[r * cols_ + c] = std::move(value);
}

std::vector<Scalar> ExactMatrix::column(std::size_t c) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_)
    throw ArityMismatch("vector length " + std::to_string(x.size()) + " != " +
                        std::to_string(cols_) + " columns");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  return y;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw ArityMismatch("matrix product shape mismatch");
  if (field_ != o.field_) throw FieldMismatch("matrix product field mismatch");
  ExactMatrix p(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p.data_[i * o.cols_ + j] += a * b;
      }
    }
  return p;
}

ExactMatrix ExactMatrix::without_rows(std::span<const std::size_t> drop) const {
  std::vector<bool> dropped(rows_, false);
  for (auto r : drop)
    if (r < rows_) dropped[r] = true;
  const auto kept = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), false));
  ExactMatrix m(kept, cols_, field_);
  std::size_t out = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (dropped[r]) continue;
    std::copy(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_,
              m.data_.begin() + out * cols_);
    ++out;
  }
  return m;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace fischerlab
