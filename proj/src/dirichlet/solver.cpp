#include "fischerlab/dirichlet/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fischerlab/error.hpp"
#include "fischerlab/fischer/operator.hpp"
#include "fischerlab/linalg/elimination.hpp"
#include "fischerlab/polyring/basis.hpp"

namespace fischerlab {

namespace {

void exact_checks(const DirichletSolution& sol, Verification& v) {
  v.harmonic_exact = laplacian(sol.h).is_zero();
  v.identity_exact = (sol.f - sol.h - sol.domain.psi() * sol.q).is_zero();
}

// Smallest positive root of a t^2 + b t + c, if any.
std::optional<double> first_positive_root(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= 1e-14 * scale) {
    if (b == 0.0) return std::nullopt;
    const double t = -c / b;
    return t > 0.0 ? std::optional<double>(t) : std::nullopt;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::optional<double> best;
  for (double t : {q / a, q != 0.0 ? c / q : q / a})
    if (t > 0.0 && (!best || t < *best)) best = t;
  return best;
}

}  // namespace

DirichletSolution dirichlet_solve(const QuadricDomain& domain, const Poly& f) {
  const Poly& psi = domain.psi();
  psi.require_compatible(f);
  DirichletSolution sol{domain, f, f, Poly(f.arity(), f.field()), {}};

  const Poly target_poly = laplacian(f);
  if (!target_poly.is_zero()) {
    const int m = f.degree().value() - 2;
    const Basis slice(f.arity(), Slice::filtered(m));
    const ExactMatrix a = operator_matrix(FischerOperator(psi), slice, slice);
    auto x = solve(a, slice.coordinates(target_poly));
    if (!x)
      throw UnsolvableSlice("F_psi(q) = Lap(f) has no solution on filtered(" +
                            std::to_string(m) + ")");
    sol.q = slice.to_poly(*x, f.field());
    sol.h = f - psi * sol.q;
  }
  exact_checks(sol, sol.verification);
  if (!sol.verification.harmonic_exact || !sol.verification.identity_exact)
    throw Error("internal error: Dirichlet solution failed exact recheck");
  sol.verification.passed = true;
  return sol;
}

DirichletSolution dirichlet_solve(const QuadricDomain& domain, const Poly& f, SampleRng& rng,
                                  int samples, double tol_root, double tol_boundary) {
  DirichletSolution sol = dirichlet_solve(domain, f);
  sol.verification = verify_solution(sol, samples, tol_boundary, rng, tol_root);
  return sol;
}

std::vector<std::vector<double>> boundary_samples(const QuadricDomain& domain, int count,
                                                  double tol, SampleRng& rng) {
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
  const Poly& psi = domain.psi();
  const std::size_t d = domain.arity();
  const Poly quadratic_part = homogeneous_component(psi, 2);
  std::vector<Poly> gradient;
  for (std::size_t i = 0; i < d; ++i) gradient.push_back(partial_derivative(psi, i));
  const auto& p = domain.interior_point();

  auto directional = [&](std::span<const double> x, std::span<const double> u) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += evaluate(gradient[i], x) * u[i];
    return s;
  };

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> points;
  const int max_attempts = 50 * count + 100;
  std::vector<double> u(d), x(d);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(points.size()) < count;
       ++attempt) {
    double norm = 0.0;
    for (auto& ui : u) {
      ui = normal(rng);
      norm += ui * ui;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (auto& ui : u) ui /= norm;

    // psi(p + t u) = a t^2 + b t + c
    const double a = evaluate(quadratic_part, u);
    const double b = directional(p, u);
    const double c = evaluate(psi, p);
    auto t = first_positive_root(a, b, c);
    if (!t) continue;

    double tt = *t;
    for (int newton = 0; newton < 3; ++newton) {
      for (std::size_t i = 0; i < d; ++i) x[i] = p[i] + tt * u[i];
      const double g = evaluate(psi, x);
      const double dg = directional(x, u);
      if (g == 0.0 || dg == 0.0) break;
      tt -= g / dg;
    }
    for (std::size_t i = 0; i < d; ++i) x[i] = p[i] + tt * u[i];
    if (std::abs(evaluate(psi, x)) < tol) points.push_back(x);
  }
  if (static_cast<int>(points.size()) < count)
    throw NoBoundaryHit("only " + std::to_string(points.size()) + " of " +
                        std::to_string(count) + " rays reached the boundary");
  return points;
}

Verification verify_solution(const DirichletSolution& sol, int count, double tol,
                             SampleRng& rng, double tol_root) {
  Verification v;
  v.tolerance = tol;
  exact_checks(sol, v);
  const Poly residual = sol.f - sol.h;
  for (auto& x : boundary_samples(sol.domain, count, tol_root, rng)) {
    BoundarySample s{x, evaluate(sol.domain.psi(), x), evaluate(residual, x)};
    v.boundary_max_error = std::max(v.boundary_max_error, std::abs(s.residual));
    v.log.push_back(std::move(s));
  }
  v.samples = count;
  v.passed = v.harmonic_exact && v.identity_exact && v.boundary_max_error < tol;
  return v;
}

KsResidual ks_residual(const QuadricDomain& domain) {
  if (!domain.is_ellipsoidal()) throw InvalidArgument("ks_residual requires an ellipsoidal domain");
  const Poly norm = Poly::squared_norm(domain.arity(), Field::Q);
  DirichletSolution sol = dirichlet_solve(domain, norm);
  KsResidual out{norm - sol.h, false, std::nullopt, std::move(sol)};

  // Compare against psi through its leading coefficient.
  const Poly& psi = domain.psi();
  const auto& [lead_mono, lead_coeff] = *psi.terms().rbegin();
  const Scalar c = out.q_residual.coefficient(lead_mono) / lead_coeff;
  if ((out.q_residual - c * psi).is_zero() && !c.is_zero()) {
    out.proportional_to_psi = true;
    out.factor = c;
  }
  return out;
}

}  // namespace fischerlab
