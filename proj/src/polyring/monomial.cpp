#include "fischerlab/polyring/monomial.hpp"

#include <numeric>
#include <ostream>

#include "fischerlab/error.hpp"
#include "fischerlab/polyring/degree.hpp"

namespace fischerlab {

int Degree::value() const {
  if (!finite_) throw InvalidArgument("degree of the zero polynomial is NEG_INF");
  return value_;
}

std::string Degree::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("NEG_INF");
}

std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)),
      degree_(static_cast<int>(std::accumulate(exps_.begin(), exps_.end(), 0ull))) {}

Monomial Monomial::unit(std::size_t arity, std::size_t axis, Exponent power) {
  if (axis >= arity) throw ArityMismatch("axis out of range");
  std::vector<Exponent> e(arity, 0);
  e[axis] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (arity() != o.arity()) throw ArityMismatch("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < o.exps_[i]) return false;
  return true;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  return ea.size() < eb.size();
}

}  // namespace fischerlab
