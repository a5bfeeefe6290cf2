#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fischerlab/polyring/scalar.hpp"

namespace fischerlab {

/// Dense row-major matrix of exact scalars sharing one field.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, Field field);

  static ExactMatrix identity(std::size_t n, Field field);
  /// Every row must have the same length and every entry the given field.
  static ExactMatrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for tests and small literals over a field.
  static ExactMatrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Entry field is checked on write.
  void set(std::size_t r, std::size_t c, Scalar value);

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Scalar> column(std::size_t c) const;

  /// A * x; x.size() must equal cols().
  std::vector<Scalar> apply(std::span<const Scalar> x) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  /// Drops the listed rows (indices need not be sorted).
  ExactMatrix without_rows(std::span<const std::size_t> drop) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

bool is_zero_vector(std::span<const Scalar> v);

}  // namespace fischerlab
