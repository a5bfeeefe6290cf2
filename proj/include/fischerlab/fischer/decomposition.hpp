#pragma once

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

/// f = psi * q + h with h harmonic, plus the outcome of exact rechecks.
struct DecompositionCertificate {
  Poly psi;
  Poly f;
  Poly q;
  Poly h;
  bool identity_exact = false;
  bool h_harmonic_exact = false;
  int slack_used = 0;
  /// Degree n of the filtered(n) slice q was searched in (-1: empty slice).
  int source_degree = 0;

  bool verified() const { return identity_exact && h_harmonic_exact; }
};

/// Recomputes f - psi*q - h == 0 and Lap(h) == 0 from scratch.
void recheck(DecompositionCertificate& cert);

/// Searches q in filtered(deg f - deg psi + 2 + s), s = 0..slack, for
/// Lap(psi q) = Lap(f) and returns the first hit with h = f - psi q.
/// Throws NoDecompositionFound when every slice is inconsistent; this is
/// inconclusive, not a proof that no decomposition exists.
DecompositionCertificate fischer_decompose(const Poly& psi, const Poly& f, int slack);

}  // namespace fischerlab
