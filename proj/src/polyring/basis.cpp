#include "fischerlab/polyring/basis.hpp"

#include <string>

#include "fischerlab/error.hpp"

namespace fischerlab {

namespace {

// Appends all degree-n exponent vectors in graded lex order (largest x1
// exponent first).
void enumerate_degree(std::size_t arity, int n, std::vector<Monomial>& out) {
  std::vector<Monomial::Exponent> exps(arity, 0);
  auto rec = [&](auto&& self, std::size_t axis, int remaining) -> void {
    if (axis + 1 == arity) {
      exps[axis] = static_cast<Monomial::Exponent>(remaining);
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[axis] = static_cast<Monomial::Exponent>(e);
      self(self, axis + 1, remaining - e);
    }
  };
  rec(rec, 0, n);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Basis::Basis(std::size_t arity, Slice slice) : arity_(arity), slice_(slice) {
  if (arity < 1) throw InvalidArgument("basis arity must be >= 1");
  if (slice.degree < 0)
    throw InvalidArgument("basis degree must be >= 0, got " + std::to_string(slice.degree));
  monomials_.reserve(slice_dimension(arity, slice));
  const int lo = slice.kind == SliceKind::Homogeneous ? slice.degree : 0;
  for (int n = lo; n <= slice.degree; ++n) enumerate_degree(arity, n, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> Basis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> Basis::coordinates(const Poly& p) const {
  if (p.arity() != arity_) throw ArityMismatch("basis/polynomial arity mismatch");
  std::vector<Scalar> v(size(), Scalar::zero(p.field()));
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx) throw BasisOverflow("monomial of degree " + std::to_string(m.degree()) +
                                  " lies outside the basis");
    v[*idx] = c;
  }
  return v;
}

Poly Basis::to_poly(std::span<const Scalar> coords, Field field) const {
  if (coords.size() != size()) throw ArityMismatch("coordinate vector length mismatch");
  Poly p(arity_, field);
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials_[i], coords[i]);
  return p;
}

Basis monomials(std::size_t arity, Slice slice) { return Basis(arity, slice); }

std::size_t slice_dimension(std::size_t arity, Slice slice) {
  if (slice.degree < 0) return 0;
  const auto n = static_cast<std::size_t>(slice.degree);
  return slice.kind == SliceKind::Homogeneous ? binomial(n + arity - 1, arity - 1)
                                              : binomial(n + arity, arity);
}

}  // namespace fischerlab
