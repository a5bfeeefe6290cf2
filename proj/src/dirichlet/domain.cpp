#include "fischerlab/dirichlet/domain.hpp"

#include <string>
#include <utility>

#include "fischerlab/error.hpp"

namespace fischerlab {

namespace {

// a_i^2 per axis if psi = c (sum x_i^2 / a_i^2 - 1) with c > 0, else empty.
std::vector<mpq_class> ellipsoid_axes(const Poly& psi) {
  const std::size_t d = psi.arity();
  const mpq_class c = -psi.constant_term().re();
  if (sgn(c) <= 0 || psi.size() != d + 1) return {};
  std::vector<mpq_class> axes;
  for (std::size_t i = 0; i < d; ++i) {
    const mpq_class coeff = psi.coefficient(Monomial::unit(d, i, 2)).re();
    if (sgn(coeff) <= 0) return {};
    axes.push_back(c / coeff);
  }
  return axes;
}

}  // namespace

QuadricDomain::QuadricDomain(Poly psi, std::vector<double> interior_point)
    : psi_(std::move(psi)), interior_(std::move(interior_point)) {
  if (psi_.field() != Field::Q) throw FieldMismatch("quadric domains require psi over Q");
  if (psi_.degree() != 2)
    throw InvalidArgument("quadric domain needs deg psi = 2, got " + psi_.degree().to_string());
  if (interior_.size() != psi_.arity())
    throw ArityMismatch("interior point has " + std::to_string(interior_.size()) +
                        " coordinates, arity is " + std::to_string(psi_.arity()));
  if (!(evaluate(psi_, interior_) < 0.0))
    throw InvalidArgument("psi must be negative at the interior point");
  semi_axes_squared_ = ellipsoid_axes(psi_);
}

QuadricDomain QuadricDomain::ellipsoid(std::span<const mpq_class> semi_axes) {
  const std::size_t d = semi_axes.size();
  Poly psi = Poly::constant(d, Scalar::from_int(Field::Q, -1));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(semi_axes[i]) <= 0) throw InvalidArgument("semi-axes must be positive");
    psi.add_term(Monomial::unit(d, i, 2),
                 Scalar(Field::Q, 1 / (semi_axes[i] * semi_axes[i])));
  }
  return QuadricDomain(std::move(psi), std::vector<double>(d, 0.0));
}

}  // namespace fischerlab
