#include <gtest/gtest.h>

#include <random>

#include "fischerlab/cli/config.hpp"
#include "fischerlab/cli/expr.hpp"
#include "fischerlab/error.hpp"
#include "oracles.hpp"

namespace fischerlab::cli {
namespace {

using fischerlab::testing::q;

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

TEST(Parse, Circle) {
  const Poly x = Poly::variable(2, Field::Q, 0), y = Poly::variable(2, Field::Q, 1);
  EXPECT_EQ(parse_polynomial("x^2 + y^2 - 1", xy, Field::Q),
            x * x + y * y - Poly::constant(2, q(1)));
}

TEST(Parse, RationalCoefficient) {
  const Poly p = parse_polynomial("3/2*x^2*y - z + 1", xyz, Field::Q);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coefficient(Monomial{2, 1, 0}), q(3, 2));
  EXPECT_EQ(p.coefficient(Monomial{0, 0, 1}), q(-1));
}

TEST(Parse, DivisionByConstant) {
  EXPECT_EQ(parse_polynomial("x^2/4+y^2-1", xy, Field::Q),
            parse_polynomial("1/4*x^2 + y^2 - 1", xy, Field::Q));
  EXPECT_EQ(parse_polynomial("(x+y)/(2*3)", xy, Field::Q),
            parse_polynomial("1/6*x + 1/6*y", xy, Field::Q));
}

TEST(Parse, UnaryMinusAndPrecedence) {
  EXPECT_EQ(parse_polynomial("-x^2", xy, Field::Q), -parse_polynomial("x*x", xy, Field::Q));
  EXPECT_EQ(parse_polynomial("2*-y", xy, Field::Q), parse_polynomial("-2*y", xy, Field::Q));
  EXPECT_EQ(parse_polynomial("x - y - 1", xy, Field::Q).constant_term(), q(-1));
  EXPECT_EQ(parse_polynomial("(x+1)^3 - (x^3 + 3*x^2 + 3*x + 1)", xy, Field::Q),
            Poly(2, Field::Q));
}

TEST(Parse, ImaginaryUnitGate) {
  try {
    parse_polynomial("x^2 + i*y", xy, Field::Q);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("'i'"), std::string::npos);
  }
  const Poly p = parse_polynomial("x^2 + i*y", xy, Field::Qi);
  EXPECT_EQ(p.coefficient(Monomial{0, 1}), Scalar::imaginary_unit());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("", xy, Field::Q), ParseError);
  EXPECT_THROW(parse_polynomial("2x", xy, Field::Q), ParseError);  // no implicit products
  EXPECT_THROW(parse_polynomial("x^y", xy, Field::Q), ParseError);
  EXPECT_THROW(parse_polynomial("x^-1", xy, Field::Q), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", xy, Field::Q), ParseError);
  EXPECT_THROW(parse_polynomial("x / y", xy, Field::Q), ParseError);
  EXPECT_THROW(parse_polynomial("x / (y - y)", xy, Field::Q), ParseError);
  try {
    parse_polynomial("x + w", xy, Field::Q);
    FAIL() << "expected UnknownVariable";
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.name(), "w");
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_polynomial("x + * y", xy, Field::Q);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format_polynomial(parse_polynomial("y^2 - 1 + x^2", xy, Field::Q), xy), "x^2 + y^2 - 1");
  EXPECT_EQ(format_polynomial(Poly(2, Field::Q), xy), "0");
  EXPECT_EQ(format_polynomial(parse_polynomial("-x*y + 1/2", xy, Field::Q), xy), "-x*y + 1/2");
  EXPECT_EQ(format_polynomial(parse_polynomial("(4*x^2 - 4*y^2 + 4)/5", xy, Field::Q), xy),
            "4/5*x^2 - 4/5*y^2 + 4/5");
  EXPECT_EQ(format_polynomial(parse_polynomial("(1 - 2*i)*x - i + 3*i*y^2", xy, Field::Qi), xy),
            "3*i*y^2 + (1 - 2*i)*x - i");
  EXPECT_EQ(format_polynomial(parse_polynomial("x*y^3 + x^3*y + x^2*y^2", xy, Field::Q), xy),
            "x^3*y + x^2*y^2 + x*y^3");
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(2024);
  for (Field f : {Field::Q, Field::Qi})
    for (std::size_t arity : {1u, 2u, 3u, 5u}) {
      const auto names = default_variable_names(arity);
      for (int trial = 0; trial < 50; ++trial) {
        const Poly p = fischerlab::testing::random_poly(rng, arity, f, 6, 8);
        EXPECT_EQ(parse_polynomial(format_polynomial(p, names), names, f), p)
            << format_polynomial(p, names);
      }
    }
}

TEST(Config, Validation) {
  RunConfig c;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.vars = {"x", "x"};
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.vars = {"x", "i"};
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.vars = {"x", "2y"};
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.vars = {"x", "y"};
  EXPECT_NO_THROW(c.validate());
  c.tol_root = 0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.tol_root = 1e-12;
  c.slack = -1;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Config, SplitList) {
  EXPECT_EQ(split_list("x, y ,z"), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(split_list("0"), (std::vector<std::string>{"0"}));
}

}  // namespace
}  // namespace fischerlab::cli
