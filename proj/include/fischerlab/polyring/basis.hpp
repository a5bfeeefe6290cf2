#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fischerlab/polyring/monomial.hpp"
#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

enum class SliceKind { Homogeneous, Filtered };

/// A graded slice: homogeneous(n) is all monomials of degree exactly n,
/// filtered(n) all monomials of degree <= n.
struct Slice {
  SliceKind kind;
  int degree;

  static Slice homogeneous(int n) { return {SliceKind::Homogeneous, n}; }
  static Slice filtered(int n) { return {SliceKind::Filtered, n}; }
  bool contains_degree(int d) const {
    return kind == SliceKind::Homogeneous ? d == degree : (d >= 0 && d <= degree);
  }
  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Ordered monomial basis of a slice, strictly increasing in graded lex.
class Basis {
 public:
  Basis(std::size_t arity, Slice slice);

  std::size_t arity() const noexcept { return arity_; }
  Slice slice() const noexcept { return slice_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coefficient vector of p; throws BasisOverflow if p has a monomial
  /// outside the basis.
  std::vector<Scalar> coordinates(const Poly& p) const;
  Poly to_poly(std::span<const Scalar> coords, Field field) const;

 private:
  std::size_t arity_;
  Slice slice_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GradedLexLess> index_;
};

/// Enumerates a slice. Throws InvalidArgument for arity < 1 or degree < 0.
Basis monomials(std::size_t arity, Slice slice);

/// Number of monomials in a slice: C(n+d-1, d-1) or C(n+d, d).
std::size_t slice_dimension(std::size_t arity, Slice slice);

}  // namespace fischerlab
