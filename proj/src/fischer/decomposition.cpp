#include "fischerlab/fischer/decomposition.hpp"

#include <algorithm>
#include <string>

#include "fischerlab/error.hpp"
#include "fischerlab/fischer/operator.hpp"
#include "fischerlab/linalg/elimination.hpp"
#include "fischerlab/polyring/basis.hpp"

namespace fischerlab {

void recheck(DecompositionCertificate& cert) {
  cert.identity_exact = (cert.f - cert.psi * cert.q - cert.h).is_zero();
  cert.h_harmonic_exact = laplacian(cert.h).is_zero();
}

DecompositionCertificate fischer_decompose(const Poly& psi, const Poly& f, int slack) {
  if (slack < 0) throw InvalidArgument("slack must be >= 0");
  psi.require_compatible(f);
  const FischerOperator op(psi);
  const Poly target_poly = laplacian(f);

  auto certify = [&](Poly q, int s, int source_degree) {
    DecompositionCertificate cert{psi, f, q, f - psi * q, false, false, s, source_degree};
    recheck(cert);
    if (!cert.verified()) throw Error("internal error: decomposition failed exact recheck");
    return cert;
  };

  if (f.is_zero()) return certify(Poly(f.arity(), f.field()), 0, -1);
  const int base = f.degree().value() - op.psi_degree() + 2;

  for (int s = 0; s <= slack; ++s) {
    const int m = base + s;
    if (m < 0) {
      // Only q = 0 lives in an empty slice.
      if (target_poly.is_zero()) return certify(Poly(f.arity(), f.field()), s, -1);
      continue;
    }
    const Basis source(f.arity(), Slice::filtered(m));
    int image_degree = std::max(op.image_degree_bound(m), 0);
    if (!target_poly.is_zero()) image_degree = std::max(image_degree, target_poly.degree().value());
    const Basis target(f.arity(), Slice::filtered(image_degree));
    const ExactMatrix a = operator_matrix(op, source, target);
    const auto b = target.coordinates(target_poly);
    if (auto x = solve(a, b)) return certify(source.to_poly(*x, f.field()), s, m);
  }
  throw NoDecompositionFound(slack, "no decomposition found with slack <= " +
                                        std::to_string(slack) + " (inconclusive)");
}

}  // namespace fischerlab
