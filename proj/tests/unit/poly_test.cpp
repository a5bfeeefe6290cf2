#include "fischerlab/polyring/poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fischerlab/error.hpp"
#include "oracles.hpp"

namespace fischerlab {
namespace {

using testing::q;

Poly var(std::size_t axis, std::size_t arity = 2, Field f = Field::Q) {
  return Poly::variable(arity, f, axis);
}
Poly cst(const Scalar& c, std::size_t arity = 2) { return Poly::constant(arity, c); }

const Poly x = var(0), y = var(1);
const Poly one = cst(q(1));

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(mul(x + y, x - y), x * x - y * y);
}

TEST(Poly, AdditiveInverseIsCanonicalZero) {
  const Poly p = x * x * y + q(3, 2) * y - one;
  const Poly z = add(p, scale(q(-1), p));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, Poly(2, Field::Q));
  EXPECT_EQ(z.degree(), Degree::neg_inf());
}

TEST(Poly, ScalarDistribution) {
  const Poly circle = x * x + y * y - one;
  EXPECT_EQ(scale(q(1, 2), circle), q(1, 2) * x * x + q(1, 2) * y * y - cst(q(1, 2)));
}

TEST(Poly, MismatchesThrow) {
  EXPECT_THROW(x + var(0, 3), ArityMismatch);
  EXPECT_THROW(x * var(0, 2, Field::Qi), FieldMismatch);
  EXPECT_THROW(scale(Scalar::one(Field::Qi), x), FieldMismatch);
}

TEST(Poly, PartialDerivative) {
  EXPECT_EQ(partial_derivative(pow(x, 3) * y, 0), q(3) * x * x * y);
  EXPECT_TRUE(partial_derivative(pow(x, 3), 1).is_zero());
  EXPECT_EQ(partial_derivative(q(1, 2) * x * x, 0), x);
  EXPECT_THROW(partial_derivative(x, 2), ArityMismatch);
}

TEST(Poly, Laplacian) {
  EXPECT_EQ(laplacian(x * x + y * y), cst(q(4)));
  EXPECT_TRUE(laplacian(x * x - y * y).is_zero());
  EXPECT_EQ(laplacian(pow(x, 3) * y), q(6) * x * y);
}

TEST(Poly, ApplyOperator) {
  EXPECT_EQ(apply_operator(x * x, pow(x, 4)), q(12) * x * x);
  EXPECT_EQ(apply_operator(x * y, x * y), one);
}

TEST(Poly, ApplyNormOperatorMatchesLaplacian) {
  std::mt19937_64 rng(20);
  const Poly norm = Poly::squared_norm(2, Field::Q);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = testing::random_poly(rng, 2, Field::Q, 7, 8);
    EXPECT_EQ(apply_operator(norm, p), laplacian(p));
  }
}

TEST(Poly, LaplacianAgreesWithInterpolationOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = testing::random_poly(rng, 3, Field::Q, 6, 6);
    const Poly lap = laplacian(p);
    std::vector<mpq_class> at{coord(rng), coord(rng), mpq_class(coord(rng), 2)};
    EXPECT_EQ(testing::eval_q(lap, at), testing::interpolated_laplacian_at(p, at));
  }
}

TEST(Poly, LaplacianLowersDegreeByTwo) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = testing::random_poly(rng, 3, Field::Q, 8, 10);
    const Poly lap = laplacian(p);
    if (!lap.is_zero()) EXPECT_LE(lap.degree(), p.degree().value() - 2);
  }
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(3);
  for (Field f : {Field::Q, Field::Qi}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Poly a = testing::random_poly(rng, 2, f, 4, 5);
      const Poly b = testing::random_poly(rng, 2, f, 4, 5);
      const Poly c = testing::random_poly(rng, 2, f, 4, 5);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(Poly, CanonicalTermsForEqualPolynomials) {
  // Same polynomial reached two ways has identical term maps.
  const Poly a = (x + y) * (x + y) - q(2) * x * y;
  const Poly b = y * y + x * x;
  EXPECT_EQ(a.terms(), b.terms());
  for (const auto& [m, c] : a.terms()) EXPECT_FALSE(c.is_zero());
}

TEST(Poly, Evaluate) {
  const double on_circle[] = {1.0, 0.0};
  EXPECT_EQ(evaluate(x * x + y * y - one, on_circle), 0.0);
  const double at21[] = {2.0, 1.0};
  EXPECT_EQ(evaluate(x * x - y * y, at21), 3.0);
  const double wrong[] = {1.0};
  EXPECT_THROW(evaluate(x, wrong), ArityMismatch);
}

TEST(Poly, EvaluateAtOriginIsConstantTerm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = testing::random_poly(rng, 3, Field::Q, 5, 6);
    const std::vector<Scalar> origin(3, Scalar::zero(Field::Q));
    EXPECT_EQ(evaluate_exact(p, origin), p.constant_term());
  }
}

TEST(Poly, ExactEvaluationIsRingHomomorphism) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (Field f : {Field::Q, Field::Qi}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Poly a = testing::random_poly(rng, 2, f, 5, 5);
      const Poly b = testing::random_poly(rng, 2, f, 5, 5);
      std::vector<Scalar> pt{Scalar(f, mpq_class(coord(rng), 3), f == Field::Qi ? coord(rng) : 0),
                             Scalar(f, coord(rng))};
      EXPECT_EQ(evaluate_exact(a * b, pt), evaluate_exact(a, pt) * evaluate_exact(b, pt));
      EXPECT_EQ(evaluate_exact(a + b, pt), evaluate_exact(a, pt) + evaluate_exact(b, pt));
    }
  }
}

TEST(Poly, HomogeneousComponentsAndDegree) {
  const Poly p = x * x + y - one;
  EXPECT_EQ(homogeneous_component(p, 1), y);
  EXPECT_EQ(Poly(2, Field::Q).degree(), Degree::neg_inf());
  EXPECT_TRUE(Poly(2, Field::Q).degree() < 0);
  EXPECT_EQ(((x * x + y * y - one) * (x - y)).degree(), 3);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = testing::random_poly(rng, 3, Field::Q, 6, 6);
    const Poly b = testing::random_poly(rng, 3, Field::Q, 6, 6);
    Poly sum(3, Field::Q);
    for (int n = 0; n <= 6; ++n) sum += homogeneous_component(a, n);
    EXPECT_EQ(sum, a);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(Degree, NegInfIsAbsorbingAndLowest) {
  EXPECT_EQ(Degree::neg_inf() + Degree(3), Degree::neg_inf());
  EXPECT_LT(Degree::neg_inf(), Degree(0));
  EXPECT_NE(Degree::neg_inf(), Degree(-1));
  EXPECT_THROW(Degree::neg_inf().value(), InvalidArgument);
}

}  // namespace
}  // namespace fischerlab
