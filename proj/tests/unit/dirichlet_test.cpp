#include "fischerlab/dirichlet/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fischerlab/error.hpp"
#include "oracles.hpp"

namespace fischerlab {
namespace {

using testing::q;

const Poly x = Poly::variable(2, Field::Q, 0);
const Poly y = Poly::variable(2, Field::Q, 1);
const Poly one = Poly::constant(2, q(1));

QuadricDomain ellipse_4_1() { return QuadricDomain(q(1, 4) * x * x + y * y - one, {0.0, 0.0}); }

TEST(QuadricDomain, Validation) {
  EXPECT_THROW(QuadricDomain(x * x + y * y - one, {2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(QuadricDomain(pow(x, 3) - one, {0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(QuadricDomain(x * x + y * y - one, {0.0}), ArityMismatch);
  EXPECT_THROW(QuadricDomain(Poly::variable(2, Field::Qi, 0) * Poly::variable(2, Field::Qi, 0) -
                                 Poly::constant(2, Scalar::one(Field::Qi)),
                             {0.0, 0.0}),
               FieldMismatch);
}

TEST(QuadricDomain, EllipsoidDetection) {
  const auto e = ellipse_4_1();
  ASSERT_TRUE(e.is_ellipsoidal());
  EXPECT_EQ(e.semi_axes_squared(), (std::vector<mpq_class>{4, 1}));
  // Positive multiples are still ellipsoidal.
  EXPECT_TRUE(QuadricDomain(q(3) * x * x + q(3) * y * y - Poly::constant(2, q(3)), {0.1, 0.0})
                  .is_ellipsoidal());
  // Hyperbola x^2 - y^2 - 1 with interior point on the concave side.
  EXPECT_FALSE(QuadricDomain(x * x - y * y - one, {0.0, 0.0}).is_ellipsoidal());
  EXPECT_FALSE(QuadricDomain(x * x + y * y + x * y - one, {0.0, 0.0}).is_ellipsoidal());
}

TEST(DirichletSolve, Ellipse) {
  const auto sol = dirichlet_solve(ellipse_4_1(), x * x);
  EXPECT_EQ(sol.q, Poly::constant(2, q(4, 5)));
  EXPECT_EQ(sol.h, q(1, 5) * (q(4) * x * x - q(4) * y * y + Poly::constant(2, q(4))));
  EXPECT_TRUE(sol.verification.harmonic_exact);
  EXPECT_TRUE(sol.verification.identity_exact);
}

TEST(DirichletSolve, ConstantAndHarmonicData) {
  const auto c = dirichlet_solve(ellipse_4_1(), Poly::constant(2, q(7, 3)));
  EXPECT_EQ(c.h, Poly::constant(2, q(7, 3)));
  EXPECT_TRUE(c.q.is_zero());
  const Poly harmonic = pow(x, 3) - q(3) * x * y * y;
  const auto h = dirichlet_solve(ellipse_4_1(), harmonic);
  EXPECT_EQ(h.h, harmonic);
  EXPECT_TRUE(h.q.is_zero());
}

TEST(DirichletSolve, UnsolvableSliceOnDegeneratePsi) {
  // psi = x^2 - y^2 + 1: Lap(psi) = 0, so F(constant) = 0 and Lap(x^2) = 2 is out of reach.
  const QuadricDomain hyperbola(y * y - x * x - one, {0.0, 0.0});
  EXPECT_THROW(dirichlet_solve(hyperbola, x * x), UnsolvableSlice);
}

TEST(DirichletSolve, DegreePreservationAndUniqueness) {
  std::mt19937_64 rng(123);
  const auto domain = QuadricDomain(q(1, 9) * x * x + q(4) * y * y - one, {0.0, 0.0});
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = testing::random_poly(rng, 2, Field::Q, 8, 6);
    const auto sol = dirichlet_solve(domain, f);
    EXPECT_LE(sol.h.degree(), f.degree());
    // Same problem with the variables swapped must give the swapped answer.
    auto swap = [](const Poly& p) {
      Poly r(2, Field::Q);
      for (const auto& [m, c] : p.terms()) r.add_term(Monomial{m[1], m[0]}, c);
      return r;
    };
    const auto mirrored = dirichlet_solve(QuadricDomain(swap(domain.psi()), {0.0, 0.0}), swap(f));
    EXPECT_EQ(swap(mirrored.h), sol.h);
    EXPECT_EQ(swap(mirrored.q), sol.q);
  }
}

TEST(BoundarySamples, UnitCircle) {
  SampleRng rng(1);
  const QuadricDomain circle(x * x + y * y - one, {0.0, 0.0});
  const auto pts = boundary_samples(circle, 4, 1e-12, rng);
  ASSERT_EQ(pts.size(), 4u);
  for (const auto& p : pts) EXPECT_LT(std::abs(p[0] * p[0] + p[1] * p[1] - 1.0), 1e-12);
}

TEST(BoundarySamples, EllipseFromOffCenterInterior) {
  SampleRng rng(2);
  const auto domain = QuadricDomain(q(1, 4) * x * x + y * y - one, {1.0, 0.5});
  for (const auto& p : boundary_samples(domain, 50, 1e-12, rng))
    EXPECT_LT(std::abs(p[0] * p[0] / 4 + p[1] * p[1] - 1.0), 1e-12);
}

TEST(BoundarySamples, EmptyZeroSetReportsNoHit) {
  // psi = -(x^2 + y^2) - 1 is negative everywhere; rays never reach a zero.
  SampleRng rng(3);
  const QuadricDomain empty(-(x * x) - y * y - one, {0.0, 0.0});
  EXPECT_THROW(boundary_samples(empty, 2, 1e-12, rng), NoBoundaryHit);
}

TEST(BoundarySamples, SeedDeterminism) {
  SampleRng a(9), b(9);
  EXPECT_EQ(boundary_samples(ellipse_4_1(), 10, 1e-12, a),
            boundary_samples(ellipse_4_1(), 10, 1e-12, b));
}

TEST(VerifySolution, EllipsePasses) {
  SampleRng rng(11);
  const auto sol = dirichlet_solve(ellipse_4_1(), x * x, rng, 100);
  EXPECT_TRUE(sol.verification.passed);
  EXPECT_EQ(sol.verification.samples, 100);
  EXPECT_LT(sol.verification.boundary_max_error, 1e-9);
}

TEST(VerifySolution, TamperedSolutionFails) {
  SampleRng rng(12);
  auto sol = dirichlet_solve(ellipse_4_1(), x * x);
  sol.h += x;
  const auto v = verify_solution(sol, 20, 1e-9, rng);
  EXPECT_FALSE(v.identity_exact);
  EXPECT_FALSE(v.passed);
  EXPECT_GT(v.boundary_max_error, 1e-3);
}

TEST(VerifySolution, IdenticalDataHasZeroError) {
  SampleRng rng(13);
  const auto sol = dirichlet_solve(ellipse_4_1(), x * y - q(2) * x, rng, 30);
  EXPECT_EQ(sol.verification.boundary_max_error, 0.0);
  EXPECT_TRUE(sol.verification.passed);
}

TEST(KsResidual, UnitCircle) {
  const auto r = ks_residual(QuadricDomain(x * x + y * y - one, {0.0, 0.0}));
  EXPECT_EQ(r.q_residual, x * x + y * y - one);
  EXPECT_TRUE(r.proportional_to_psi);
  ASSERT_TRUE(r.factor);
  EXPECT_EQ(*r.factor, q(1));
  EXPECT_EQ(r.solution.h, one);
}

TEST(KsResidual, Ellipse) {
  const auto r = ks_residual(ellipse_4_1());
  ASSERT_TRUE(r.proportional_to_psi);
  EXPECT_TRUE((r.q_residual - *r.factor * ellipse_4_1().psi()).is_zero());
}

TEST(KsResidual, SphereOfRadiusR) {
  const std::vector<mpq_class> radii(3, mpq_class(5, 2));
  const auto sphere = QuadricDomain::ellipsoid(radii);
  const auto r = ks_residual(sphere);
  const Poly norm = Poly::squared_norm(3, Field::Q);
  EXPECT_EQ(r.q_residual, norm - Poly::constant(3, q(25, 4)));
  ASSERT_TRUE(r.factor);
  EXPECT_EQ(*r.factor, q(25, 4));
}

TEST(KsResidual, RequiresEllipsoid) {
  EXPECT_THROW(ks_residual(QuadricDomain(x * x - y * y - one, {0.0, 0.0})), InvalidArgument);
}

}  // namespace
}  // namespace fischerlab
