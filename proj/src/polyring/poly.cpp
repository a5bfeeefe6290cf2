#include "fischerlab/polyring/poly.hpp"

#include <algorithm>
#include <string>

#include "fischerlab/error.hpp"

namespace fischerlab {

Poly::Poly(std::size_t arity, Field field) : arity_(arity), field_(field) {
  if (arity == 0) throw InvalidArgument("polynomial arity must be >= 1");
}

Poly Poly::constant(std::size_t arity, const Scalar& c) {
  Poly p(arity, c.field());
  p.add_term(Monomial(arity), c);
  return p;
}

Poly Poly::variable(std::size_t arity, Field field, std::size_t axis) {
  return term(Monomial::unit(arity, axis), Scalar::one(field));
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
  Poly p(m.arity(), c.field());
  p.add_term(m, c);
  return p;
}

Poly Poly::from_terms(std::size_t arity, Field field,
                      const std::vector<std::pair<Monomial, Scalar>>& terms) {
  Poly p(arity, field);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Poly Poly::squared_norm(std::size_t arity, Field field) {
  Poly p(arity, field);
  for (std::size_t i = 0; i < arity; ++i)
    p.add_term(Monomial::unit(arity, i, 2), Scalar::one(field));
  return p;
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::neg_inf();
  return Degree(terms_.rbegin()->first.degree());
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Poly::constant_term() const { return coefficient(Monomial(arity_)); }

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.arity() != arity_)
    throw ArityMismatch("monomial of arity " + std::to_string(m.arity()) +
                        " in a polynomial of arity " + std::to_string(arity_));
  if (c.field() != field_)
    throw FieldMismatch("coefficient field does not match polynomial field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::require_compatible(const Poly& o) const {
  if (arity_ != o.arity_)
    throw ArityMismatch("polynomial arity mismatch: " + std::to_string(arity_) +
                        " vs " + std::to_string(o.arity_));
  if (field_ != o.field_)
    throw FieldMismatch("polynomial field mismatch: " +
                        std::string(field_name(field_)) + " vs " +
                        std::string(field_name(o.field_)));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.field() != field_)
    throw FieldMismatch("scalar field does not match polynomial field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  Poly r(a.arity_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.arity_ == b.arity_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Scalar& c, const Poly& p) { return c * p; }

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(p.arity(), Scalar::one(p.field()));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly partial_derivative(const Poly& p, std::size_t axis) {
  if (axis >= p.arity())
    throw ArityMismatch("axis " + std::to_string(axis) + " out of range for arity " +
                        std::to_string(p.arity()));
  Poly r(p.arity(), p.field());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[axis];
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[axis] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * Scalar::from_int(p.field(), e));
  }
  return r;
}

Poly mixed_partial(const Poly& p, const Monomial& alpha) {
  if (alpha.arity() != p.arity()) throw ArityMismatch("operator arity mismatch");
  Poly r(p.arity(), p.field());
  for (const auto& [m, c] : p.terms()) {
    if (!m.divisible_by(alpha)) continue;
    auto exps = m.exponents();
    mpz_class factor = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      // falling factorial e (e-1) ... (e-a+1)
      for (Monomial::Exponent k = 0; k < alpha[i]; ++k) factor *= exps[i] - k;
      exps[i] -= alpha[i];
    }
    r.add_term(Monomial(std::move(exps)), c * Scalar(p.field(), mpq_class(factor)));
  }
  return r;
}

Poly laplacian(const Poly& p) {
  Poly r(p.arity(), p.field());
  for (std::size_t i = 0; i < p.arity(); ++i)
    r += mixed_partial(p, Monomial::unit(p.arity(), i, 2));
  return r;
}

Poly apply_operator(const Poly& op, const Poly& p) {
  op.require_compatible(p);
  Poly r(p.arity(), p.field());
  for (const auto& [alpha, c] : op.terms()) r += c * mixed_partial(p, alpha);
  return r;
}

Poly homogeneous_component(const Poly& p, int n) {
  if (n < 0) throw InvalidArgument("negative degree");
  Poly r(p.arity(), p.field());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == n) r.add_term(m, c);
  return r;
}

namespace {

template <typename T, typename One>
std::vector<std::vector<T>> power_table(const Poly& p, std::span<const T> point,
                                        One one) {
  std::vector<Monomial::Exponent> max_exp(p.arity(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < p.arity(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  std::vector<std::vector<T>> table(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    table[i].reserve(max_exp[i] + 1);
    table[i].push_back(one);
    for (Monomial::Exponent k = 1; k <= max_exp[i]; ++k)
      table[i].push_back(table[i].back() * point[i]);
  }
  return table;
}

}  // namespace

double evaluate(const Poly& p, std::span<const double> point) {
  if (point.size() != p.arity())
    throw ArityMismatch("point has " + std::to_string(point.size()) +
                        " coordinates, polynomial arity is " + std::to_string(p.arity()));
  if (p.field() != Field::Q)
    throw FieldMismatch("floating-point evaluation requires a polynomial over Q");
  const auto table = power_table<double>(p, point, 1.0);
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = c.to_double();
    for (std::size_t i = 0; i < p.arity(); ++i) t *= table[i][m[i]];
    sum += t;
  }
  return sum;
}

Scalar evaluate_exact(const Poly& p, std::span<const Scalar> point) {
  if (point.size() != p.arity())
    throw ArityMismatch("point has " + std::to_string(point.size()) +
                        " coordinates, polynomial arity is " + std::to_string(p.arity()));
  for (const auto& x : point)
    if (x.field() != p.field()) throw FieldMismatch("point field does not match polynomial");
  const auto table = power_table<Scalar>(p, point, Scalar::one(p.field()));
  Scalar sum = Scalar::zero(p.field());
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (m[i] > 0) t *= table[i][m[i]];
    sum += t;
  }
  return sum;
}

}  // namespace fischerlab
