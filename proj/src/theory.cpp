#include "paircorr/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "paircorr/errors.hpp"
#include "paircorr/specfun.hpp"

namespace paircorr::theory {
namespace {

using specfun::BetaParams;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// 1 - lambda^2 / 4 without cancellation near lambda = 2.
double cap_argument(double lam) { return (2.0 - lam) * (2.0 + lam) / 4.0; }

double half_dimension(int n) { return (n + 1) / 2.0; }

// ln of 2 pi^n / (n Gamma(n/2) Gamma((n+1)/2) Gamma(1/2)).
double log_region_prefactor(int n) {
  const double log_pi = std::log(std::numbers::pi);
  return std::log(2.0) + n * log_pi - std::log(static_cast<double>(n)) -
         specfun::log_gamma(n / 2.0) - specfun::log_gamma(half_dimension(n)) -
         0.5 * log_pi;
}

double clamp_unit(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

DistributionSpec::DistributionSpec(int n, EvalMode mode) : n_(n), mode_(mode) {
  if (n < 1) {
    throw DomainError("dimension must be at least 1, got " + std::to_string(n));
  }
  if (mode == EvalMode::direct && n > kMaxDirectDimension) {
    throw DomainError("dimension " + std::to_string(n) +
                      " requires log-domain evaluation");
  }
}

DistributionSpec DistributionSpec::automatic(int n) {
  return DistributionSpec(
      n, n > kMaxDirectDimension ? EvalMode::log_domain : EvalMode::direct);
}

Lambda::Lambda(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 2.0)) {
    throw DomainError("normalized distance must lie in [0, 2], got " +
                      std::to_string(value));
  }
}

double region_volume(const DistributionSpec& spec, Lambda lam) {
  const int n = spec.dimension();
  const double l = lam.value();
  const double a = half_dimension(n);
  const BetaParams cap_params(a, 0.5);
  const BetaParams core_params(a, a);
  const double x_cap = cap_argument(l);
  const double x_core = l * l / 4.0;

  if (spec.mode() == EvalMode::direct) {
    const double prefactor = std::exp(log_region_prefactor(n));
    const double cap_term = std::pow(l, n) * specfun::inc_beta(x_cap, cap_params);
    const double core_term =
        std::pow(2.0, n) * specfun::inc_beta(x_core, core_params);
    return prefactor * cap_term + prefactor * core_term;
  }

  const double log_prefactor = log_region_prefactor(n);
  const double log_cap_term =
      (l == 0.0 ? kNegInf : n * std::log(l)) +
      specfun::log_inc_beta(x_cap, cap_params);
  const double log_core_term =
      n * std::log(2.0) + specfun::log_inc_beta(x_core, core_params);
  return std::exp(log_prefactor + log_cap_term) +
         std::exp(log_prefactor + log_core_term);
}

double cdf(const DistributionSpec& spec, Lambda lam) {
  const int n = spec.dimension();
  const double l = lam.value();
  const double a = half_dimension(n);
  const BetaParams cap_params(a, 0.5);
  const BetaParams core_params(a, a);
  const double x_cap = cap_argument(l);
  const double x_core = l * l / 4.0;

  if (spec.mode() == EvalMode::direct) {
    const double cap_term = std::pow(l, n) * specfun::inc_beta(x_cap, cap_params);
    const double core_term =
        std::pow(2.0, n) * specfun::inc_beta(x_core, core_params);
    return clamp_unit((cap_term + core_term) / specfun::beta(cap_params));
  }

  // lambda^n I_{x_cap}(a, 1/2) + 2^n B(a, a) / B(a, 1/2) I_{x_core}(a, a)
  const double log_cap_term = (l == 0.0 ? kNegInf : n * std::log(l)) +
                              specfun::log_reg_inc_beta(x_cap, cap_params);
  const double log_core_term = n * std::log(2.0) +
                               specfun::log_beta(core_params) -
                               specfun::log_beta(cap_params) +
                               specfun::log_reg_inc_beta(x_core, core_params);
  return clamp_unit(std::exp(log_cap_term) + std::exp(log_core_term));
}

double log_pdf(const DistributionSpec& spec, Lambda lam) {
  const int n = spec.dimension();
  const double l = lam.value();
  const double log_power =
      n == 1 ? 0.0 : (l == 0.0 ? kNegInf : (n - 1) * std::log(l));
  return std::log(static_cast<double>(n)) + log_power +
         specfun::log_reg_inc_beta(cap_argument(l),
                                   BetaParams(half_dimension(n), 0.5));
}

double pdf(const DistributionSpec& spec, Lambda lam) {
  if (spec.mode() == EvalMode::log_domain) return std::exp(log_pdf(spec, lam));
  const int n = spec.dimension();
  const double l = lam.value();
  return n * std::pow(l, n - 1) *
         specfun::reg_inc_beta(cap_argument(l),
                               BetaParams(half_dimension(n), 0.5));
}

double pdf_closed_form(int n, Lambda lam) {
  const double l = lam.value();
  constexpr double pi = std::numbers::pi;
  switch (n) {
    case 2:
      return 4.0 * l / pi * std::acos(l / 2.0) -
             l * l * std::sqrt((2.0 - l) * (2.0 + l)) / pi;
    case 3:
      return 3.0 * l * l - 2.25 * l * l * l + 0.1875 * std::pow(l, 5);
    default:
      throw UnsupportedError("closed form available only for n = 2 and 3, got " +
                             std::to_string(n));
  }
}

double unit_ball_volume(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  return std::exp(n / 2.0 * std::log(std::numbers::pi) -
                  specfun::log_gamma(n / 2.0 + 1.0));
}

double cap_volume(int n, double r) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (!(r >= 0.0 && r <= 2.0)) {
    throw DomainError("cap parameter must lie in [0, 2], got " +
                      std::to_string(r));
  }
  return 0.5 * unit_ball_volume(n) *
         specfun::reg_inc_beta(cap_argument(r),
                               BetaParams(half_dimension(n), 0.5));
}

Lambda mode(const DistributionSpec& spec) {
  if (spec.dimension() < 2) {
    throw DomainError("the density is monotone for n = 1; mode needs n >= 2");
  }
  const auto objective = [&](double l) {
    return spec.mode() == EvalMode::log_domain ? log_pdf(spec, Lambda(l))
                                               : pdf(spec, Lambda(l));
  };

  constexpr int kGrid = 1000;
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double v = objective(2.0 * i / kGrid);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double lo = 2.0 * std::max(best - 1, 0) / kGrid;
  double hi = 2.0 * std::min(best + 1, kGrid) / kGrid;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  return Lambda(0.5 * (lo + hi));
}

}  // namespace paircorr::theory
