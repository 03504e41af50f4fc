#include "gjt/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace gjt;

TEST(ParsePolynomial, SingleMonomialSextic) {
  const Polynomial p = parse_polynomial("X1^2*X2^2*X3^2", 3);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.degree(), 6);
  EXPECT_EQ(p.ring(), Ring::Dual);
  EXPECT_EQ(p.coefficient({2, 2, 2}), Rational(1));
}

TEST(ParsePolynomial, CancellationGivesZero) {
  const Polynomial p = parse_polynomial("x1 - x1", 3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(ParsePolynomial, AliasNamesFourTerms) {
  const Polynomial p = parse_polynomial("X^3*Y^4 + X^3*Z^4 + X^2*Y*Z^4 + Y^3*Z^4", 3);
  EXPECT_EQ(p.terms().size(), 4u);
  EXPECT_EQ(p.degree(), 7);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.coefficient({2, 1, 4}), Rational(1));
}

TEST(ParsePolynomial, RationalCoefficientsAndSigns) {
  const Polynomial p = parse_polynomial("1/2*X1^3 - 3/4*X2^3 + X3^3", 3);
  EXPECT_EQ(p.coefficient({3, 0, 0}), Rational(1, 2));
  EXPECT_EQ(p.coefficient({0, 3, 0}), Rational(-3, 4));
  EXPECT_EQ(p.coefficient({0, 0, 3}), Rational(1));
}

TEST(ParsePolynomial, ErrorsCarryPosition) {
  try {
    parse_polynomial("X1^2 + + X2", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position, 5u);
  }
}

TEST(ParsePolynomial, RejectsMixedCase) {
  EXPECT_THROW(parse_polynomial("x1*X2", 3), ParseError);
  EXPECT_THROW(parse_polynomial("X1 + x2", 3), ParseError);
}

TEST(ParsePolynomial, RejectsMixedAliasAndIndexed) {
  EXPECT_THROW(parse_polynomial("X1 + Y", 3), ParseError);
}

TEST(ParsePolynomial, RejectsBadIndexAndZeroDenominator) {
  EXPECT_THROW(parse_polynomial("X4", 3), ParseError);
  EXPECT_THROW(parse_polynomial("X0", 3), ParseError);
  EXPECT_THROW(parse_polynomial("1/0*X1", 3), ParseError);
  EXPECT_THROW(parse_polynomial("Y", 2), ParseError);
}

TEST(ApplyOperator, SinglePartial) {
  const Polynomial f = parse_polynomial("X1^2*X2^2*X3^2", 3);
  const Polynomial d = apply_operator(parse_polynomial("x1", 3), f);
  EXPECT_EQ(d, parse_polynomial("2*X1*X2^2*X3^2", 3));
}

TEST(ApplyOperator, SecondPartialKillsVariable) {
  const Polynomial f = parse_polynomial("X1^2*X2^2*X3^2", 3);
  const Polynomial d = apply_operator(parse_polynomial("x2^2", 3), f);
  EXPECT_EQ(d, parse_polynomial("2*X1^2*X3^2", 3));
}

TEST(ApplyOperator, AbsentVariableGivesZero) {
  EXPECT_TRUE(apply_operator(parse_polynomial("x1", 3), parse_polynomial("X2^3", 3)).is_zero());
}

TEST(ApplyOperator, RingMismatchRejected) {
  const Polynomial op = parse_polynomial("x1", 3);
  const Polynomial f = parse_polynomial("X1^2", 3);
  EXPECT_THROW(apply_operator(op, op), std::invalid_argument);
  EXPECT_THROW(apply_operator(f, f), std::invalid_argument);
  EXPECT_THROW(apply_operator(f, op), std::invalid_argument);
}

TEST(LinearPowerDerivative, Examples) {
  const Polynomial f = parse_polynomial("X1^2*X2^2*X3^2", 3);
  const LinearForm x1 = parse_linear_form("x1", 3);
  EXPECT_TRUE(linear_power_derivative(x1, 3, f).is_zero());
  EXPECT_EQ(linear_power_derivative(x1, 0, f), f);
  EXPECT_EQ(linear_power_derivative(x1, 2, f), parse_polynomial("2*X2^2*X3^2", 3));
}

TEST(MonomialBasis, DegreeOneAndZero) {
  const auto deg1 = monomial_basis(3, 1);
  ASSERT_EQ(deg1.size(), 3u);
  EXPECT_EQ(deg1[0], (Exponents{1, 0, 0}));
  EXPECT_EQ(deg1[1], (Exponents{0, 1, 0}));
  EXPECT_EQ(deg1[2], (Exponents{0, 0, 1}));
  const auto deg0 = monomial_basis(3, 0);
  ASSERT_EQ(deg0.size(), 1u);
  EXPECT_EQ(deg0[0], (Exponents{0, 0, 0}));
}

TEST(MonomialBasis, GradedLexOrderDegreeTwo) {
  const auto basis = monomial_basis(3, 2);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis.front(), (Exponents{2, 0, 0}));
  EXPECT_EQ(basis.back(), (Exponents{0, 0, 2}));
}

TEST(ParseLinearForm, AcceptsZeroRejectsHigherDegree) {
  EXPECT_TRUE(parse_linear_form("x1 - x1", 3).is_zero());
  EXPECT_EQ(parse_linear_form("x1 + 2*x2", 3).coefficients()[1], Rational(2));
  EXPECT_THROW(parse_linear_form("x1^2", 3), ParseError);
  EXPECT_THROW(parse_linear_form("x1 + 1", 3), ParseError);
  EXPECT_THROW(parse_linear_form("X1", 3), ParseError);
}

TEST(PolynomialProperties, ActionIsBilinearAndMultiplicative) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    const int d = static_cast<int>(testsupport::draw(rng, 2, 6));
    const Polynomial f = testsupport::random_dual_form(rng, d, 5);

    Polynomial p(3, Ring::Operator), q(3, Ring::Operator);
    const auto ops = monomial_basis(3, static_cast<int>(testsupport::draw(rng, 1, 2)));
    for (int t = 0; t < 3; ++t) {
      p.add_term(ops[static_cast<std::size_t>(testsupport::draw(rng, 0, static_cast<long>(ops.size()) - 1))],
                 Rational(testsupport::draw(rng, -4, 4)));
      q.add_term(ops[static_cast<std::size_t>(testsupport::draw(rng, 0, static_cast<long>(ops.size()) - 1))],
                 Rational(testsupport::draw(rng, -4, 4)));
    }
    const Rational a(testsupport::draw(rng, -5, 5));

    EXPECT_EQ(apply_operator(a * p + q, f), a * apply_operator(p, f) + apply_operator(q, f));
    EXPECT_EQ(apply_operator(p * q, f), apply_operator(p, apply_operator(q, f)));
    EXPECT_EQ(apply_operator(p * q, f), apply_operator(q, apply_operator(p, f)));

    const Polynomial pf = apply_operator(p, f);
    if (!pf.is_zero() && !p.is_zero() && p.is_homogeneous()) {
      EXPECT_EQ(pf.degree(), f.degree() - p.degree());
    }
  }
}

TEST(PolynomialProperties, PrintParseRoundTrip) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const int d = static_cast<int>(testsupport::draw(rng, 1, 7));
    const Polynomial f = testsupport::random_dual_form(rng, d, 6);
    const std::string text = f.to_string();
    EXPECT_EQ(parse_polynomial(text, 3), f);
    EXPECT_EQ(parse_polynomial(text, 3).to_string(), text);
  }
}
