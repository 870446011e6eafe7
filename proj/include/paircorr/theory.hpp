#pragma once

// Theoretical distribution of the normalized distance lambda = |x - y| / R
// between two points of an equidistributed set inside an n-ball of radius R,
// in the limit R -> infinity.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace paircorr::theory {

enum class EvalMode { direct, log_domain };

// Largest dimension evaluated without logarithms; beyond it lambda^n and the
// incomplete Beta factor leave the double range.
inline constexpr int kMaxDirectDimension = 300;

class DistributionSpec {
 public:
  // Throws DomainError for n < 1 or for direct mode with n above
  // kMaxDirectDimension.
  DistributionSpec(int n, EvalMode mode);

  // Direct mode where it is safe, log-domain otherwise.
  static DistributionSpec automatic(int n);

  int dimension() const noexcept { return n_; }
  EvalMode mode() const noexcept { return mode_; }

 private:
  int n_;
  EvalMode mode_;
};

// Normalized distance, 0 <= value <= 2.
class Lambda {
 public:
  explicit Lambda(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Volume of the region of pairs (a, b) in the unit ball with |a - b| <= lambda,
// a subset of R^{2n}. Sum of the cap-integral term and the Beta term.
double region_volume(const DistributionSpec& spec, Lambda lam);

// Probability that two independent uniform points of the unit n-ball are at
// most lambda apart.
double cdf(const DistributionSpec& spec, Lambda lam);

// P_n(lambda) = n lambda^{n-1} I_{1 - lambda^2/4}((n+1)/2, 1/2).
double pdf(const DistributionSpec& spec, Lambda lam);

// ln P_n(lambda); -inf where the density vanishes.
double log_pdf(const DistributionSpec& spec, Lambda lam);

// Elementary closed forms of P_n for n = 2 and n = 3. Throws UnsupportedError
// for any other n.
double pdf_closed_form(int n, Lambda lam);

// Volume of the unit n-ball.
double unit_ball_volume(int n);

// Volume of {x in B_n(1) : x_1 >= r / 2}, the cap cut at distance r / 2 from
// the centre, for r in [0, 2].
double cap_volume(int n, double r);

using Rational = boost::multiprecision::cpp_rational;

// Polynomial in lambda with exact rational coefficients; coefficients[k]
// multiplies lambda^k.
class RationalPolynomial {
 public:
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  // Exact integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Rational> coeffs_;
};

inline constexpr int kMaxPolynomialDimension = 25;

// Exact P_n for odd n (degree 2n - 1). Throws UnsupportedError for even n and
// std::out_of_range for n > kMaxPolynomialDimension.
RationalPolynomial pdf_polynomial_odd(int n);

// argmax of P_n over [0, 2]: 1000-point grid bracket, then golden-section
// search to 1e-8. Requires n >= 2.
Lambda mode(const DistributionSpec& spec);

}  // namespace paircorr::theory
