#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fischerlab/dirichlet/domain.hpp"
#include "fischerlab/polyring/poly.hpp"

namespace fischerlab {

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kDefaultBoundaryTolerance = 1e-9;

/// Boundary sampler and verifier randomness. Callers own and seed it.
using SampleRng = std::mt19937_64;

struct BoundarySample {
  std::vector<double> point;
  double psi_value = 0.0;
  double residual = 0.0;  // f(x) - h(x)
};

struct Verification {
  bool harmonic_exact = false;
  bool identity_exact = false;
  double boundary_max_error = 0.0;
  int samples = 0;
  double tolerance = kDefaultBoundaryTolerance;
  bool passed = false;
  std::vector<BoundarySample> log;
};

struct DirichletSolution {
  QuadricDomain domain;
  Poly f;
  Poly h;
  Poly q;
  Verification verification;
};

/// Solves Lap(psi q) = Lap(f) for q in filtered(deg f - 2) and sets h = f - psi q.
/// Only the exact checks are run. Throws UnsolvableSlice when the slice system
/// is inconsistent (impossible for ellipsoids).
DirichletSolution dirichlet_solve(const QuadricDomain& domain, const Poly& f);

/// As above, then verify_solution with `samples` boundary points.
DirichletSolution dirichlet_solve(const QuadricDomain& domain, const Poly& f, SampleRng& rng,
                                  int samples, double tol_root = kDefaultRootTolerance,
                                  double tol_boundary = kDefaultBoundaryTolerance);

/// Boundary points hit by rays from the interior point in random directions,
/// each with |psi(x)| < tol. Throws NoBoundaryHit when rays keep missing.
std::vector<std::vector<double>> boundary_samples(const QuadricDomain& domain, int count,
                                                  double tol, SampleRng& rng);

/// Recomputes the exact checks and measures max |f - h| on `count` boundary
/// points; passes iff both exact checks hold and the error is below tol.
Verification verify_solution(const DirichletSolution& sol, int count, double tol,
                             SampleRng& rng, double tol_root = kDefaultRootTolerance);

struct KsResidual {
  Poly q_residual;  // |x|^2 - h
  bool proportional_to_psi = false;
  std::optional<Scalar> factor;
  DirichletSolution solution;
};

/// Solves the Dirichlet problem for |x|^2 and tests whether |x|^2 - h is a
/// scalar multiple of psi. The domain must be ellipsoidal.
KsResidual ks_residual(const QuadricDomain& domain);

}  // namespace fischerlab
