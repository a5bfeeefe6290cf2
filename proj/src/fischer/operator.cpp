#include "fischerlab/fischer/operator.hpp"

#include <utility>

#include "fischerlab/error.hpp"

namespace fischerlab {

FischerOperator::FischerOperator(Poly psi)
    : FischerOperator(psi, Poly::squared_norm(psi.arity(), psi.field())) {}

FischerOperator::FischerOperator(Poly psi, Poly op) : psi_(std::move(psi)), op_(std::move(op)) {
  psi_.require_compatible(op_);
  if (psi_.degree() < 1) throw InvalidArgument("psi must be non-constant");
  if (op_.degree() < 1) throw InvalidArgument("differential operator must be non-constant");
}

bool FischerOperator::is_laplacian() const {
  return op_ == Poly::squared_norm(arity(), field());
}

Poly FischerOperator::apply(const Poly& q) const {
  psi_.require_compatible(q);
  const Poly product = psi_ * q;
  return is_laplacian() ? laplacian(product) : apply_operator(op_, product);
}

Poly fischer_apply(const FischerOperator& op, const Poly& q) { return op.apply(q); }

ExactMatrix operator_matrix(const FischerOperator& op, const Basis& source,
                            const Basis& target) {
  if (source.arity() != op.arity() || target.arity() != op.arity())
    throw ArityMismatch("basis arity does not match the operator");
  ExactMatrix m(target.size(), source.size(), op.field());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Poly image = op.apply(Poly::term(source[j], Scalar::one(op.field())));
    for (const auto& [mono, c] : image.terms()) {
      auto row = target.index_of(mono);
      if (!row)
        throw BasisOverflow("image of source monomial " + std::to_string(j) +
                            " has a degree-" + std::to_string(mono.degree()) +
                            " monomial outside the target basis");
      m.set(*row, j, c);
    }
  }
  return m;
}

}  // namespace fischerlab
