#include <stdexcept>
#include <string>
#include <utility>

#include "paircorr/errors.hpp"
#include "paircorr/theory.hpp"

namespace paircorr::theory {

using boost::multiprecision::cpp_int;

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  // Every finite double is a dyadic rational, so this is exact up to the
  // final rounding.
  return static_cast<double>(evaluate(Rational(x)));
}

Rational RationalPolynomial::integrate(const Rational& lo,
                                       const Rational& hi) const {
  Rational total = 0;
  Rational hi_power = hi;
  Rational lo_power = lo;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    total += coeffs_[k] * (hi_power - lo_power) / Rational(k + 1);
    hi_power *= hi;
    lo_power *= lo;
  }
  return total;
}

// With u = sqrt(1 - t) the incomplete Beta integral becomes
//   B_x((n+1)/2, 1/2) = 2 * integral_{lambda/2}^{1} (1 - u^2)^m du,  m = (n-1)/2,
// and expanding (1 - u^2)^m binomially gives
//   I = 1 - sum_k c_k (lambda/2)^{2k+1} / sum_k c_k,  c_k = (-1)^k C(m,k) / (2k+1).
RationalPolynomial pdf_polynomial_odd(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (n % 2 == 0) {
    throw UnsupportedError("P_n is a polynomial only for odd n, got " +
                           std::to_string(n));
  }
  if (n > kMaxPolynomialDimension) {
    throw std::out_of_range("exact polynomial limited to n <= " +
                            std::to_string(kMaxPolynomialDimension) + ", got " +
                            std::to_string(n));
  }
  const int m = (n - 1) / 2;

  std::vector<Rational> c(m + 1);
  cpp_int binomial = 1;
  Rational sum = 0;
  for (int k = 0; k <= m; ++k) {
    c[k] = Rational(binomial) / (2 * k + 1);
    if (k % 2 == 1) c[k] = -c[k];
    sum += c[k];
    binomial = binomial * (m - k) / (k + 1);
  }

  std::vector<Rational> coeffs(2 * n, Rational(0));
  coeffs[n - 1] = n;
  const Rational scale = Rational(n) / sum;
  for (int k = 0; k <= m; ++k) {
    const cpp_int two_power = cpp_int(1) << (2 * k + 1);
    coeffs[n + 2 * k] -= scale * c[k] / Rational(two_power);
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace paircorr::theory
