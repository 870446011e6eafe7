#pragma once

// Gamma/Beta family used throughout the library. All functions are pure and
// safe to call concurrently.

namespace paircorr::specfun {

// Shape parameters of a Beta function. Both must be strictly positive and
// finite; the constructor throws DomainError otherwise.
class BetaParams {
 public:
  BetaParams(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  // The parameters with a and b exchanged (used by the reflection formula).
  BetaParams swapped() const noexcept { return BetaParams(b_, a_, Unchecked{}); }

 private:
  struct Unchecked {};
  BetaParams(double a, double b, Unchecked) noexcept : a_(a), b_(b) {}

  double a_;
  double b_;
};

// ln Gamma(z) for z > 0. Relative error below 1e-13 on [0.5, 1e6]; exact
// zeros at z = 1 and z = 2.
double log_gamma(double z);

double log_beta(const BetaParams& p);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta(const BetaParams& p);

// I_x(a, b), the regularized incomplete Beta function. Uses the continued
// fraction directly below x = (a + 1) / (a + b + 2) and the complement
// 1 - I_{1-x}(b, a) above it.
double reg_inc_beta(double x, const BetaParams& p);

// ln I_x(a, b). Stays finite where I_x itself underflows; returns -inf at
// x = 0 and 0 at x = 1.
double log_reg_inc_beta(double x, const BetaParams& p);

// B_x(a, b) = I_x(a, b) B(a, b).
double inc_beta(double x, const BetaParams& p);

// ln B_x(a, b).
double log_inc_beta(double x, const BetaParams& p);

}  // namespace paircorr::specfun
