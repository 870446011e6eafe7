#include "paircorr/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "paircorr/errors.hpp"
#include "paircorr/rng.hpp"
#include "parallel.hpp"

namespace paircorr::oracle {
namespace {

constexpr int kMaxDimension = 6;  // 2n <= 12

void check_samples(std::uint64_t samples) {
  if (samples < kMinSamples) {
    throw DomainError("Monte Carlo needs at least " + std::to_string(kMinSamples) +
                      " samples, got " + std::to_string(samples));
  }
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("Monte Carlo dimension must lie in [1, " +
                      std::to_string(kMaxDimension) + "], got " +
                      std::to_string(n));
  }
}

// Counts samples s in [0, samples) for which hit(rng_s) is true.
template <class Hit>
std::uint64_t count_hits(std::uint64_t samples, std::uint64_t seed,
                         unsigned workers, Hit hit) {
  workers = detail::resolve_workers(workers);
  std::vector<std::uint64_t> partial(workers, 0);
  detail::parallel_slices(samples, workers, [&](unsigned w, std::size_t begin,
                                                std::size_t end) {
    std::uint64_t local = 0;
    for (std::size_t s = begin; s < end; ++s) {
      CounterRng rng(seed, s);
      if (hit(rng)) ++local;
    }
    partial[w] = local;
  });
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

McEstimate hit_or_miss(std::uint64_t hits, std::uint64_t samples,
                       std::uint64_t seed, double box_volume) {
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  McEstimate e;
  e.value = p * box_volume;
  e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * box_volume;
  e.samples = samples;
  e.seed = seed;
  return e;
}

}  // namespace

RegionSpec::RegionSpec(int n, theory::Lambda lam) : n_(n), lam_(lam) {
  check_dimension(n);
}

bool RegionSpec::contains(std::span<const double> a,
                          std::span<const double> b) const {
  double a2 = 0.0;
  double b2 = 0.0;
  double d2 = 0.0;
  for (int i = 0; i < n_; ++i) {
    a2 += a[i] * a[i];
    b2 += b[i] * b[i];
    d2 += (a[i] - b[i]) * (a[i] - b[i]);
  }
  const double l = lam_.value();
  return a2 <= 1.0 && b2 <= 1.0 && d2 <= l * l;
}

McEstimate mc_region_volume(const RegionSpec& region, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers) {
  check_samples(samples);
  const int n = region.dimension();
  const std::uint64_t hits =
      count_hits(samples, seed, workers, [&](CounterRng& rng) {
        std::array<double, kMaxDimension> a{};
        std::array<double, kMaxDimension> b{};
        for (int i = 0; i < n; ++i) a[i] = rng.uniform(-1.0, 1.0);
        for (int i = 0; i < n; ++i) b[i] = rng.uniform(-1.0, 1.0);
        return region.contains(std::span(a.data(), n), std::span(b.data(), n));
      });
  return hit_or_miss(hits, samples, seed, std::ldexp(1.0, 2 * n));
}

McEstimate mc_cap_volume(int n, double height_param, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers) {
  check_samples(samples);
  check_dimension(n);
  if (!(height_param >= 0.0 && height_param <= 2.0)) {
    throw DomainError("cap parameter must lie in [0, 2], got " +
                      std::to_string(height_param));
  }
  const double cut = height_param / 2.0;
  const std::uint64_t hits =
      count_hits(samples, seed, workers, [&](CounterRng& rng) {
        double norm2 = 0.0;
        double first = 0.0;
        for (int i = 0; i < n; ++i) {
          const double x = rng.uniform(-1.0, 1.0);
          if (i == 0) first = x;
          norm2 += x * x;
        }
        return norm2 <= 1.0 && first >= cut;
      });
  return hit_or_miss(hits, samples, seed, std::ldexp(1.0, n));
}

McEstimate mc_cap_measure(int n, double half_angle, std::uint64_t samples,
                          std::uint64_t seed, unsigned workers) {
  check_samples(samples);
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (!(half_angle > 0.0 && half_angle <= std::numbers::pi)) {
    throw DomainError("cap half-angle must lie in (0, pi], got " +
                      std::to_string(half_angle));
  }
  const double cos_half = std::cos(half_angle);
  const bool whole_sphere = half_angle >= std::numbers::pi;
  const std::uint64_t hits =
      count_hits(samples, seed, workers, [&](CounterRng& rng) {
        if (whole_sphere) return true;
        double norm2 = 0.0;
        double first = 0.0;
        for (int i = 0; i < n; ++i) {
          const double g = rng.normal();
          if (i == 0) first = g;
          norm2 += g * g;
        }
        return first >= std::sqrt(norm2) * cos_half;
      });
  return hit_or_miss(hits, samples, seed, 1.0);
}

McReport compare(const McEstimate& estimate, double analytic_value) {
  McReport report;
  report.estimate = estimate;
  report.analytic_value = analytic_value;
  const double gap = std::fabs(estimate.value - analytic_value);
  if (estimate.std_error > 0.0) {
    report.sigma_distance = gap / estimate.std_error;
  } else {
    report.sigma_distance =
        gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return report;
}

nlohmann::ordered_json to_json(const McReport& report) {
  nlohmann::ordered_json j;
  j["value"] = report.estimate.value;
  j["std_error"] = report.estimate.std_error;
  j["samples"] = report.estimate.samples;
  j["seed"] = report.estimate.seed;
  j["analytic_value"] = report.analytic_value;
  if (std::isfinite(report.sigma_distance)) {
    j["sigma_distance"] = report.sigma_distance;
  } else {
    j["sigma_distance"] = nullptr;
  }
  return j;
}

}  // namespace paircorr::oracle
