#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "paircorr/errors.hpp"
#include "paircorr/theory.hpp"

namespace paircorr::theory {
namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> items) {
  std::vector<Rational> out;
  for (auto [p, q] : items) out.emplace_back(p, q);
  return out;
}

TEST(PdfPolynomial, OneDimension) {
  EXPECT_EQ(pdf_polynomial_odd(1).coefficients(), rationals({{1, 1}, {-1, 2}}));
}

TEST(PdfPolynomial, ThreeDimensions) {
  EXPECT_EQ(pdf_polynomial_odd(3).coefficients(),
            rationals({{0, 1}, {0, 1}, {3, 1}, {-9, 4}, {0, 1}, {3, 16}}));
}

// Reference coefficients from a symbolic expansion of n l^(n-1) I(...).
TEST(PdfPolynomial, FiveAndSevenDimensions) {
  const auto five = pdf_polynomial_odd(5);
  EXPECT_EQ(five.degree(), 9u);
  EXPECT_EQ(five.coefficients(),
            rationals({{0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 1}, {-75, 16}, {0, 1},
                       {25, 32}, {0, 1}, {-15, 256}}));
  EXPECT_EQ(pdf_polynomial_odd(7).coefficients(),
            rationals({{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {7, 1},
                       {-245, 32}, {0, 1}, {245, 128}, {0, 1}, {-147, 512}, {0, 1},
                       {35, 2048}}));
}

TEST(PdfPolynomial, ExactValueAtOne) {
  EXPECT_EQ(pdf_polynomial_odd(3).evaluate(Rational(1)), Rational(15, 16));
  EXPECT_EQ(pdf_polynomial_odd(3).evaluate(1.0), 0.9375);
}

TEST(PdfPolynomial, IntegratesToExactlyOne) {
  for (int n = 1; n <= kMaxPolynomialDimension; n += 2) {
    EXPECT_EQ(pdf_polynomial_odd(n).integrate(Rational(0), Rational(2)), Rational(1))
        << "n = " << n;
  }
}

TEST(PdfPolynomial, VanishesAtTwo) {
  for (int n = 1; n <= kMaxPolynomialDimension; n += 2) {
    EXPECT_EQ(pdf_polynomial_odd(n).evaluate(Rational(2)), Rational(0)) << "n = " << n;
  }
}

TEST(PdfPolynomial, AgreesWithNumericPdf) {
  for (int n = 1; n <= kMaxPolynomialDimension; n += 2) {
    const auto poly = pdf_polynomial_odd(n);
    const auto spec = DistributionSpec::automatic(n);
    for (int i = 0; i <= 400; ++i) {
      const double l = i / 200.0;
      EXPECT_NEAR(poly.evaluate(l), pdf(spec, Lambda(l)), 1e-10)
          << "n = " << n << " l = " << l;
    }
  }
}

TEST(PdfPolynomial, Errors) {
  EXPECT_THROW(pdf_polynomial_odd(2), UnsupportedError);
  EXPECT_THROW(pdf_polynomial_odd(0), DomainError);
  EXPECT_THROW(pdf_polynomial_odd(27), std::out_of_range);
}

TEST(RationalPolynomial, IntegrateAndEvaluate) {
  const RationalPolynomial p(rationals({{1, 1}, {0, 1}, {3, 1}}));  // 1 + 3x^2
  EXPECT_EQ(p.integrate(Rational(0), Rational(1)), Rational(2));
  EXPECT_EQ(p.integrate(Rational(1), Rational(0)), Rational(-2));
  EXPECT_EQ(p.evaluate(Rational(1, 3)), Rational(4, 3));
  EXPECT_EQ(p.degree(), 2u);
}

}  // namespace
}  // namespace paircorr::theory
