#include <gtest/gtest.h>

#include "focal/form_io.hpp"
#include "focal/polynomial.hpp"

namespace focal {
namespace {

class PolynomialTest : public ::testing::Test {
 protected:
  Polynomial parse(const char* text) const { return parse_polynomial(field, text); }
  PrimeField field{23};
};

TEST_F(PolynomialTest, ArithmeticAndDegrees) {
  const Polynomial a = parse("x + y");
  const Polynomial b = parse("x - y");
  EXPECT_EQ(a * b, parse("x^2 - y^2"));
  EXPECT_EQ(a.power(3), parse("x^3 + 3x^2y + 3xy^2 + y^3"));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE(parse("x^2 + 3xy + z^2").is_homogeneous());
  EXPECT_FALSE(parse("x^2 + y").is_homogeneous());
  EXPECT_EQ(parse("x^3y + z").degree_in(Var::X), 3);
}

TEST_F(PolynomialTest, DerivativeAndEvaluate) {
  const Polynomial f = parse("x^3 - 2x^2y + 5z");
  EXPECT_EQ(f.derivative(Var::X), parse("3x^2 - 4xy"));
  EXPECT_EQ(f.derivative(Var::Z), parse("5"));
  EXPECT_EQ(f.evaluate(field.from_int(2), field.from_int(1), field.from_int(1)),
            field.from_int(8 - 8 + 5));
}

TEST_F(PolynomialTest, HomogenizeAndSpecialize) {
  const Polynomial f = parse("1 + x + xy");
  const Polynomial h = f.homogenize(3);
  EXPECT_EQ(h, parse("z^3 + xz^2 + xyz"));
  EXPECT_EQ(h.specialize(Var::Z, field.one()), f);
  EXPECT_THROW(f.homogenize(1), std::invalid_argument);
}

TEST_F(PolynomialTest, SubstituteComposes) {
  const Polynomial f = parse("x^2 + y");
  const std::array<Polynomial, 3> images = {parse("x + y"), parse("2x"), parse("z")};
  EXPECT_EQ(f.substitute(images), parse("x^2 + 2xy + y^2 + 2x"));
}

TEST_F(PolynomialTest, ExactDivision) {
  const Polynomial g = parse("3x + 8y + z");
  const Polynomial k = parse("x^2 - 4yz + 7z^2");
  const auto q = divide_exact(g * k, g);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, k);
  EXPECT_FALSE(divide_exact(g * k + parse("x"), g).has_value());
  EXPECT_FALSE(divide_exact(parse("x^2 + y^2"), parse("x + y")).has_value());
  EXPECT_THROW(divide_exact(g, Polynomial(field)), std::invalid_argument);
}

}  // namespace
}  // namespace focal
