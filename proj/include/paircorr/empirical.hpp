#pragma once

// Empirical pair-distance distributions of lattice point sets and their
// comparison with the theoretical distribution.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "paircorr/pointsets.hpp"
#include "paircorr/theory.hpp"

namespace paircorr::empirical {

inline constexpr int kDefaultBins = 200;
inline constexpr std::uint64_t kDefaultMaxPoints = 20'000;

enum class HistogramMode { exact, sampled };

struct PairOptions {
  // Point cap for all-pairs work (exact histograms, region counts).
  std::uint64_t max_points = kDefaultMaxPoints;
  // 0 selects the hardware concurrency.
  unsigned workers = 0;
};

// Counts of normalized pair distances lambda = |x - y| / R in left-closed
// bins [e_i, e_{i+1}); the last bin also holds lambda = 2.
struct PairHistogram {
  int n = 0;
  double radius = 0.0;
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_pairs = 0;
  HistogramMode mode = HistogramMode::exact;
  std::uint64_t seed = 0;  // meaningful in sampled mode only

  std::size_t bins() const noexcept { return counts.size(); }
  double relative_frequency(std::size_t bin) const noexcept;
  // Fraction of pairs with lambda below bin_edges[edge].
  double empirical_cdf(std::size_t edge) const noexcept;
};

// bins + 1 equally spaced edges on [0, 2].
std::vector<double> uniform_edges(int bins);

// Bin of lambda under left-closed bins, with lambda = 2 in the last bin.
std::size_t bin_index(std::span<const double> edges, double lambda) noexcept;

// Histogram of externally supplied normalized distances (no point set).
PairHistogram histogram_from_lambdas(int n, double radius, int bins,
                                     std::span<const double> lambdas);

// All N(N-1)/2 unordered pairs of distinct points.
PairHistogram exact_histogram(const pointsets::LatticePointSet& set, int bins,
                              const PairOptions& options = {});

// `samples` ordered pairs drawn uniformly with replacement; x = y is redrawn.
// Sample i uses the random stream (seed, i), so the result is independent of
// the worker count.
PairHistogram sampled_histogram(const pointsets::LatticePointSet& set, int bins,
                                std::uint64_t samples, std::uint64_t seed,
                                const PairOptions& options = {});

// Same, over an already enumerated point list.
PairHistogram sampled_histogram(const pointsets::PointList& points,
                                double radius, int bins, std::uint64_t samples,
                                std::uint64_t seed, unsigned workers = 0);

enum class GofKind { ks, chi_square };

struct GofReport {
  GofKind kind = GofKind::ks;
  double statistic = 0.0;
  std::uint64_t sample_size = 0;
  double threshold = 0.0;
  bool pass = false;
};

// max(0.01, 1.63 / sqrt(N)): 0.01 for N >= 10^6 pairs, widening for small N.
double default_ks_threshold(std::uint64_t sample_size);

// sup over bin edges of |empirical CDF - cdf|. This is a discretized,
// deterministic statistic, not the classical KS test with p-values.
GofReport ks_compare(const PairHistogram& hist,
                     const theory::DistributionSpec& spec,
                     std::optional<double> threshold = std::nullopt);

// Pearson chi-square over bins with expected count >= 5, against the
// Wilson-Hilferty approximation of the 0.999 quantile unless a threshold is
// given.
GofReport chi_square_compare(const PairHistogram& hist,
                             const theory::DistributionSpec& spec,
                             std::optional<double> threshold = std::nullopt);

// Ordered pairs (a, b), a = b included, with |a - b| <= lambda R; equals N^2
// at lambda = 2.
std::uint64_t pair_count_in_region(const pointsets::LatticePointSet& set,
                                   theory::Lambda lam,
                                   const PairOptions& options = {});

// Several lambdas from one pass over the pairs.
std::vector<std::uint64_t> pair_counts_in_region(
    const pointsets::LatticePointSet& set, std::span<const theory::Lambda> lams,
    const PairOptions& options = {});

// CSV rows `bin_left,bin_right,count,relative_frequency,theory_pdf_at_midpoint`
// (header included, 17 significant digits).
void write_histogram_csv(std::ostream& out, const PairHistogram& hist,
                         const theory::DistributionSpec& spec);

nlohmann::ordered_json to_json(const GofReport& report);

const char* to_string(GofKind kind) noexcept;
const char* to_string(HistogramMode mode) noexcept;

}  // namespace paircorr::empirical
