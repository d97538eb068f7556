#include "godeaux/arith.hpp"

#include <gtest/gtest.h>

#include <random>

namespace godeaux {
namespace {

Scalar z(int n, long k = 1) { return Scalar::root_of_unity(n, k); }

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational(5, 6).to_string(), "5/6");
  EXPECT_THROW(Rational::parse("1/0"), ArithmeticError);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Scalar, SpecExamples) {
  EXPECT_EQ(z(5) + z(5, 2) + z(5, 3) + z(5, 4), Scalar(-1).embed(5));
  EXPECT_EQ(z(4) * z(4), Scalar(-1).embed(4));
  EXPECT_EQ(Scalar(Rational(1, 2)) + Scalar(Rational(1, 3)), Scalar(Rational(5, 6)));

  EXPECT_EQ(z(5).inverse(), z(5, 4));
  EXPECT_EQ(Scalar(Rational(-2, 3)).inverse(), Scalar(Rational(-3, 2)));

  EXPECT_EQ(pow(z(5), 5), Scalar(1).embed(5));
  EXPECT_EQ(pow(z(4), 3), -z(4));
  EXPECT_EQ(pow(Scalar(2), -2), Scalar(Rational(1, 4)));
}

// (1 + t) x = 1 in Q[t]/(t^2 + 1), solved as a 2x2 rational system:
// (x0 - x1) + (x0 + x1) t = 1  =>  x0 - x1 = 1, x0 + x1 = 0.
TEST(Scalar, InverseOfOnePlusI) {
  Rational x0 = Rational(1) / Rational(2);
  Rational x1 = -x0;
  Rational coeffs[] = {x0, x1};
  Scalar expected = Scalar::from_coefficients(4, coeffs);
  Scalar one_plus_i = Scalar(1).embed(4) + z(4);
  EXPECT_EQ(one_plus_i.inverse(), expected);
  EXPECT_EQ(expected.to_string(), "-1/2*z4+1/2");
}

TEST(Scalar, Errors) {
  EXPECT_THROW(z(3) + z(5), ArithmeticError);
  try {
    (void)(z(3) * z(4));
    FAIL();
  } catch (const ArithmeticError& e) {
    EXPECT_STREQ(e.what(), "incompatible fields");
  }
  try {
    (void)Scalar(0).inverse();
    FAIL();
  } catch (const ArithmeticError& e) {
    EXPECT_STREQ(e.what(), "division by zero");
  }
  EXPECT_THROW(pow(Scalar(0), -1), ArithmeticError);
  EXPECT_THROW(Scalar::root_of_unity(7), ArithmeticError);
}

TEST(Scalar, ParseAndRender) {
  Scalar s = parse_scalar("z5^2 - 1/2", 5);
  EXPECT_EQ(s, z(5, 2) - Scalar(Rational(1, 2)).embed(5));
  EXPECT_EQ(parse_scalar(s.to_string(), 5), s);
  EXPECT_EQ(parse_scalar("(1+z4)*(1-z4)", 4), Scalar(2).embed(4));
  EXPECT_EQ(parse_scalar("z3^3", 3), Scalar(1).embed(3));
  EXPECT_THROW(parse_scalar("z5", 3), ArithmeticError);
  EXPECT_THROW(parse_scalar("1 +", 1), std::invalid_argument);
}

TEST(Scalar, Conjugates) {
  // zeta -> zeta^2 is an automorphism; the norm of zeta_5 - 1 is 5.
  Scalar a = z(5) - Scalar(1).embed(5);
  Scalar norm = Scalar(1).embed(5);
  for (int k = 1; k < 5; ++k) norm *= a.conjugate(k);
  EXPECT_EQ(norm, Scalar(5).embed(5));
  EXPECT_THROW((void)a.conjugate(5), ArithmeticError);
}

Scalar random_scalar(std::mt19937_64& gen, int order) {
  std::vector<Rational> c;
  for (int i = 0; i < 4; ++i)
    c.emplace_back(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 5) + 1);
  return Scalar::from_coefficients(order, c);
}

TEST(ScalarProperty, FieldAxioms) {
  std::mt19937_64 gen(7);
  for (int order : {1, 3, 4, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(gen, order), b = random_scalar(gen, order), c = random_scalar(gen, order);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(ScalarProperty, CanonicalFormIdempotent) {
  std::mt19937_64 gen(11);
  for (int order : {3, 4, 5}) {
    Scalar a = random_scalar(gen, order);
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    EXPECT_EQ(Scalar::from_coefficients(order, c), a);
  }
}

TEST(ScalarProperty, EmbeddingConsistent) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    Rational p(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 7) + 1);
    Rational q(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 7) + 1);
    for (int order : {3, 4, 5}) {
      Scalar sp = Scalar(p).embed(order), sq = Scalar(q).embed(order);
      EXPECT_EQ((sp * sq).rational_value(), p * q);
      EXPECT_EQ((sp + sq).rational_value(), p + q);
      if (!q.is_zero()) EXPECT_EQ((sp / sq).rational_value(), p / q);
    }
  }
}

}  // namespace
}  // namespace godeaux
