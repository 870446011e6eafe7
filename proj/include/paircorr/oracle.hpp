#pragma once

// Hit-or-miss Monte Carlo estimators used as independent checks of the
// analytic volumes. Sample i draws from the random stream (seed, i), so an
// estimate depends only on (inputs, samples, seed), never on the number of
// workers.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>

#include "paircorr/theory.hpp"

namespace paircorr::oracle {

inline constexpr std::uint64_t kMinSamples = 10'000;

// Pairs (a, b) of the unit n-ball with |a - b| <= lambda, inside R^{2n}.
class RegionSpec {
 public:
  RegionSpec(int n, theory::Lambda lam);

  int dimension() const noexcept { return n_; }
  theory::Lambda lambda() const noexcept { return lam_; }

  bool contains(std::span<const double> a, std::span<const double> b) const;

 private:
  int n_;
  theory::Lambda lam_;
};

struct McEstimate {
  double value = 0.0;
  // sqrt(p (1 - p) / samples) times the sampling-box volume.
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Uniform over [-1, 1]^{2n}; value = hit fraction * 2^{2n}.
McEstimate mc_region_volume(const RegionSpec& region, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers = 0);

// Volume of {x in B_n(1) : x_1 >= r / 2} from uniform points of [-1, 1]^n.
McEstimate mc_cap_volume(int n, double height_param, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers = 0);

// Fraction of uniform directions on S^{n-1} within half_angle of the pole,
// using normalized Gaussian vectors.
McEstimate mc_cap_measure(int n, double half_angle, std::uint64_t samples,
                          std::uint64_t seed, unsigned workers = 0);

struct McReport {
  McEstimate estimate;
  double analytic_value = 0.0;
  // |value - analytic| / std_error (0 when both the gap and the error vanish).
  double sigma_distance = 0.0;
};

McReport compare(const McEstimate& estimate, double analytic_value);

nlohmann::ordered_json to_json(const McReport& report);

}  // namespace paircorr::oracle
