#include "paircorr/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "paircorr/errors.hpp"

namespace paircorr::specfun {
namespace {

constexpr int kZetaTerms = 64;

// zeta(k) for k = 0 .. kZetaTerms; entries 0 and 1 are unused.
const std::array<double, kZetaTerms + 1>& zeta_table() {
  static const auto table = [] {
    std::array<double, kZetaTerms + 1> z{};
    constexpr double pi = std::numbers::pi;
    z[2] = pi * pi / 6.0;
    z[3] = 1.2020569031595942854;
    z[4] = std::pow(pi, 4) / 90.0;
    z[5] = 1.0369277551433699263;
    z[6] = std::pow(pi, 6) / 945.0;
    z[7] = 1.0083492773819228268;
    z[8] = std::pow(pi, 8) / 9450.0;
    z[9] = 1.0020083928260822144;
    for (int k = 10; k <= kZetaTerms; ++k) {
      // Direct summation; the tail beyond j = 64 is below 1e-17 for k >= 10.
      double s = 0.0;
      for (int j = 64; j >= 1; --j) s += std::pow(static_cast<double>(j), -k);
      z[k] = s;
    }
    return z;
  }();
  return table;
}

// ln Gamma(1 + x) for |x| <= 0.5 from its Taylor series about 1.
double log_gamma_1p(double x) {
  const auto& zeta = zeta_table();
  double sum = 0.0;
  double power = x;  // (-1)^{k-1} x^k
  for (int k = 2; k <= kZetaTerms; ++k) {
    power *= -x;
    sum -= power * zeta[k] / k;
  }
  return -std::numbers::egamma * x + sum;
}

// Stirling series, accurate to full precision for z >= 8.
double log_gamma_stirling(double z) {
  static constexpr std::array<double, 10> coeff = {
      1.0 / 12.0,          -1.0 / 360.0,      1.0 / 1260.0,
      -1.0 / 1680.0,       1.0 / 1188.0,      -691.0 / 360360.0,
      1.0 / 156.0,         -3617.0 / 122400.0, 43867.0 / 244188.0,
      -174611.0 / 125400.0};
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  double term = inv;
  for (double c : coeff) {
    series += c * term;
    term *= inv2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

// Modified Lentz evaluation of the incomplete Beta continued fraction.
double beta_continued_fraction(double x, double a, double b) {
  constexpr int kMaxIterations = 100000;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  return h;
}

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("incomplete beta: x = " + std::to_string(x) +
                      " is outside [0, 1]");
  }
}

}  // namespace

BetaParams::BetaParams(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("beta parameters must be positive and finite (a = " +
                      std::to_string(a) + ", b = " + std::to_string(b) + ")");
  }
}

double log_gamma(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(z));
  }
  if (z < 0.5) return log_gamma(z + 1.0) - std::log(z);
  if (z < 1.5) return log_gamma_1p(z - 1.0);
  if (z < 2.5) return std::log1p(z - 2.0) + log_gamma_1p(z - 2.0);
  if (z < 8.0) {
    // Shift down into [1.5, 2.5): Gamma(z) = (z-1)(z-2)...(z-m) Gamma(z-m).
    double product = 1.0;
    double w = z;
    while (w >= 2.5) {
      w -= 1.0;
      product *= w;
    }
    return std::log(product) + log_gamma(w);
  }
  return log_gamma_stirling(z);
}

double log_beta(const BetaParams& p) {
  return log_gamma(p.a()) + log_gamma(p.b()) - log_gamma(p.a() + p.b());
}

double beta(const BetaParams& p) { return std::exp(log_beta(p)); }

double log_reg_inc_beta(double x, const BetaParams& p) {
  check_unit_interval(x);
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x == 1.0) return 0.0;
  const double a = p.a();
  const double b = p.b();
  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(p);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return log_front + std::log(beta_continued_fraction(x, a, b)) - std::log(a);
  }
  const double complement =
      std::exp(log_front) * beta_continued_fraction(1.0 - x, b, a) / b;
  if (complement >= 1.0) return -std::numeric_limits<double>::infinity();
  return std::log1p(-complement);
}

double reg_inc_beta(double x, const BetaParams& p) {
  check_unit_interval(x);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = p.a();
  const double b = p.b();
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(p));
  double value;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    value = front * beta_continued_fraction(x, a, b) / a;
  } else {
    value = 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

double inc_beta(double x, const BetaParams& p) {
  return reg_inc_beta(x, p) * beta(p);
}

double log_inc_beta(double x, const BetaParams& p) {
  return log_reg_inc_beta(x, p) + log_beta(p);
}

}  // namespace paircorr::specfun
