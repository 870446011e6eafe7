#include "paircorr/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "paircorr/errors.hpp"
#include "paircorr/format.hpp"
#include "paircorr/rng.hpp"
#include "parallel.hpp"

namespace paircorr::empirical {
namespace {

using pointsets::LatticePointSet;
using pointsets::PointList;

// Squared distances up to this bound are classified through a lookup table.
constexpr std::int64_t kMaxTableEntries = std::int64_t{1} << 24;

template <int Dim>
std::int64_t squared_distance(const std::int32_t* a, const std::int32_t* b,
                              int n) noexcept {
  std::int64_t d2 = 0;
  const int dim = Dim > 0 ? Dim : n;
  for (int k = 0; k < dim; ++k) {
    const std::int64_t d = static_cast<std::int64_t>(a[k]) - b[k];
    d2 += d * d;
  }
  return d2;
}

// Maps a squared integer distance to a bucket, through a table when the
// distance range is small enough and through `classify` otherwise. Both
// paths use the same function, so the choice never changes a result.
class BucketMap {
 public:
  template <class Classify>
  BucketMap(std::int64_t max_d2, Classify classify) : classify_(classify) {
    if (max_d2 < kMaxTableEntries) {
      table_.resize(static_cast<std::size_t>(max_d2 + 1));
      for (std::int64_t d2 = 0; d2 <= max_d2; ++d2) {
        table_[d2] = static_cast<std::uint32_t>(classify(d2));
      }
    }
  }

  std::size_t operator()(std::int64_t d2) const {
    if (static_cast<std::uint64_t>(d2) < table_.size()) return table_[d2];
    return classify_(d2);
  }

 private:
  std::vector<std::uint32_t> table_;
  std::function<std::size_t(std::int64_t)> classify_;
};

// Row boundaries splitting the triangular pair loop (row i has N-1-i pairs)
// into `workers` slices of nearly equal work.
std::vector<std::size_t> triangular_split(std::size_t rows, unsigned workers) {
  const double total = 0.5 * static_cast<double>(rows) * (rows > 0 ? rows - 1 : 0);
  std::vector<std::size_t> bounds{0};
  double done = 0.0;
  std::size_t row = 0;
  for (unsigned w = 1; w < workers; ++w) {
    const double target = total * w / workers;
    while (row < rows && done < target) {
      done += static_cast<double>(rows - 1 - row);
      ++row;
    }
    bounds.push_back(row);
  }
  bounds.push_back(rows);
  return bounds;
}

template <int Dim>
void accumulate_rows(const PointList& points, std::size_t row_begin,
                     std::size_t row_end, const BucketMap& bucket,
                     std::vector<std::uint64_t>& local) {
  const int n = points.dimension;
  const std::int32_t* base = points.coords.data();
  const std::size_t total = points.size();
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const std::int32_t* a = base + i * n;
    for (std::size_t j = i + 1; j < total; ++j) {
      ++local[bucket(squared_distance<Dim>(a, base + j * n, n))];
    }
  }
}

// Bucket counts over all unordered pairs of distinct points.
std::vector<std::uint64_t> bucket_all_pairs(const PointList& points,
                                            std::size_t buckets,
                                            const BucketMap& bucket,
                                            unsigned workers) {
  workers = detail::resolve_workers(workers);
  const auto bounds = triangular_split(points.size(), workers);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(buckets, 0));
  detail::parallel_slices(workers, workers, [&](unsigned, std::size_t begin,
                                                std::size_t end) {
    for (std::size_t w = begin; w < end; ++w) {
      switch (points.dimension) {
        case 1:
          accumulate_rows<1>(points, bounds[w], bounds[w + 1], bucket, partial[w]);
          break;
        case 2:
          accumulate_rows<2>(points, bounds[w], bounds[w + 1], bucket, partial[w]);
          break;
        case 3:
          accumulate_rows<3>(points, bounds[w], bounds[w + 1], bucket, partial[w]);
          break;
        default:
          accumulate_rows<0>(points, bounds[w], bounds[w + 1], bucket, partial[w]);
      }
    }
  });
  std::vector<std::uint64_t> merged(buckets, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < buckets; ++k) merged[k] += p[k];
  }
  return merged;
}

std::int64_t max_squared_distance(double radius) {
  return static_cast<std::int64_t>(std::floor(4.0 * radius * radius));
}

BucketMap lambda_bins(const std::vector<double>& edges, double radius) {
  return BucketMap(max_squared_distance(radius), [edges, radius](std::int64_t d2) {
    return bin_index(edges, std::sqrt(static_cast<double>(d2)) / radius);
  });
}

PointList enumerate_within(const LatticePointSet& set, std::uint64_t max_points,
                           const char* what) {
  const std::uint64_t n_points = pointsets::count(set);
  if (n_points > max_points) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n_points) +
                            " points exceed the all-pairs cap of " +
                            std::to_string(max_points) +
                            "; use sampled mode or raise the cap",
                        n_points);
  }
  return pointsets::enumerate(set);
}

void check_bins(int bins) {
  if (bins < 1) throw DomainError("bin count must be positive");
}

PairHistogram empty_histogram(int n, double radius, int bins) {
  PairHistogram hist;
  hist.n = n;
  hist.radius = radius;
  hist.bin_edges = uniform_edges(bins);
  hist.counts.assign(static_cast<std::size_t>(bins), 0);
  return hist;
}

}  // namespace

double PairHistogram::relative_frequency(std::size_t bin) const noexcept {
  if (total_pairs == 0) return 0.0;
  return static_cast<double>(counts[bin]) / static_cast<double>(total_pairs);
}

double PairHistogram::empirical_cdf(std::size_t edge) const noexcept {
  if (total_pairs == 0) return 0.0;
  std::uint64_t below = 0;
  for (std::size_t k = 0; k < edge && k < counts.size(); ++k) below += counts[k];
  return static_cast<double>(below) / static_cast<double>(total_pairs);
}

std::vector<double> uniform_edges(int bins) {
  check_bins(bins);
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) edges[i] = 2.0 * i / bins;
  edges.back() = 2.0;
  return edges;
}

std::size_t bin_index(std::span<const double> edges, double lambda) noexcept {
  const std::size_t bins = edges.size() - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), lambda);
  const auto pos = static_cast<std::size_t>(it - edges.begin());
  if (pos == 0) return 0;
  return std::min(pos - 1, bins - 1);
}

PairHistogram histogram_from_lambdas(int n, double radius, int bins,
                                     std::span<const double> lambdas) {
  PairHistogram hist = empty_histogram(n, radius, bins);
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 2.0)) {
      throw DomainError("normalized distance outside [0, 2]: " + std::to_string(l));
    }
    ++hist.counts[bin_index(hist.bin_edges, l)];
  }
  hist.total_pairs = lambdas.size();
  return hist;
}

PairHistogram exact_histogram(const LatticePointSet& set, int bins,
                              const PairOptions& options) {
  check_bins(bins);
  const PointList points =
      enumerate_within(set, options.max_points, "exact histogram");
  PairHistogram hist = empty_histogram(set.dimension(), set.radius(), bins);
  hist.mode = HistogramMode::exact;
  if (points.size() < 2) return hist;
  hist.counts = bucket_all_pairs(points, hist.bins(),
                                 lambda_bins(hist.bin_edges, set.radius()),
                                 options.workers);
  hist.total_pairs =
      static_cast<std::uint64_t>(points.size()) * (points.size() - 1) / 2;
  return hist;
}

PairHistogram sampled_histogram(const PointList& points, double radius, int bins,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned workers) {
  check_bins(bins);
  if (points.size() < 2) {
    throw DomainError("sampled histogram needs at least two points, got " +
                      std::to_string(points.size()));
  }
  if (samples < 1) throw DomainError("sample count must be positive");

  PairHistogram hist = empty_histogram(points.dimension, radius, bins);
  hist.mode = HistogramMode::sampled;
  hist.seed = seed;
  const BucketMap bucket = lambda_bins(hist.bin_edges, radius);
  const std::uint64_t total = points.size();
  const int n = points.dimension;
  const std::int32_t* base = points.coords.data();

  workers = detail::resolve_workers(workers);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(hist.bins(), 0));
  detail::parallel_slices(samples, workers, [&](unsigned w, std::size_t begin,
                                                std::size_t end) {
    auto& local = partial[w];
    for (std::size_t s = begin; s < end; ++s) {
      CounterRng rng(seed, s);
      std::uint64_t i;
      std::uint64_t j;
      do {
        i = rng.below(total);
        j = rng.below(total);
      } while (i == j);
      ++local[bucket(squared_distance<0>(base + i * n, base + j * n, n))];
    }
  });
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < hist.bins(); ++k) hist.counts[k] += p[k];
  }
  hist.total_pairs = samples;
  return hist;
}

PairHistogram sampled_histogram(const LatticePointSet& set, int bins,
                                std::uint64_t samples, std::uint64_t seed,
                                const PairOptions& options) {
  return sampled_histogram(pointsets::enumerate(set), set.radius(), bins,
                           samples, seed, options.workers);
}

double default_ks_threshold(std::uint64_t sample_size) {
  if (sample_size == 0) return 0.01;
  return std::max(0.01, 1.63 / std::sqrt(static_cast<double>(sample_size)));
}

namespace {

void check_comparable(const PairHistogram& hist,
                      const theory::DistributionSpec& spec) {
  if (hist.n != spec.dimension()) {
    throw DomainError("histogram dimension " + std::to_string(hist.n) +
                      " does not match distribution dimension " +
                      std::to_string(spec.dimension()));
  }
  if (hist.total_pairs == 0) {
    throw DomainError("cannot compare an empty histogram");
  }
}

double cdf_at(const theory::DistributionSpec& spec, double edge) {
  return theory::cdf(spec, theory::Lambda(std::clamp(edge, 0.0, 2.0)));
}

}  // namespace

GofReport ks_compare(const PairHistogram& hist,
                     const theory::DistributionSpec& spec,
                     std::optional<double> threshold) {
  check_comparable(hist, spec);
  double statistic = 0.0;
  std::uint64_t below = 0;
  const double total = static_cast<double>(hist.total_pairs);
  for (std::size_t e = 0; e < hist.bin_edges.size(); ++e) {
    if (e > 0) below += hist.counts[e - 1];
    const double gap =
        std::fabs(static_cast<double>(below) / total - cdf_at(spec, hist.bin_edges[e]));
    statistic = std::max(statistic, gap);
  }
  GofReport report;
  report.kind = GofKind::ks;
  report.statistic = statistic;
  report.sample_size = hist.total_pairs;
  report.threshold = threshold.value_or(default_ks_threshold(hist.total_pairs));
  report.pass = report.statistic <= report.threshold;
  return report;
}

GofReport chi_square_compare(const PairHistogram& hist,
                             const theory::DistributionSpec& spec,
                             std::optional<double> threshold) {
  check_comparable(hist, spec);
  const double total = static_cast<double>(hist.total_pairs);
  double statistic = 0.0;
  int used = 0;
  double previous = cdf_at(spec, hist.bin_edges.front());
  for (std::size_t b = 0; b < hist.bins(); ++b) {
    const double next = cdf_at(spec, hist.bin_edges[b + 1]);
    const double expected = total * (next - previous);
    previous = next;
    if (expected < 5.0) continue;
    const double diff = static_cast<double>(hist.counts[b]) - expected;
    statistic += diff * diff / expected;
    ++used;
  }
  if (used < 2) {
    throw DomainError("chi-square needs at least two bins with expected count >= 5");
  }
  const double dof = used - 1;
  constexpr double z999 = 3.090232306167813;
  const double h = 2.0 / (9.0 * dof);
  const double critical = dof * std::pow(1.0 - h + z999 * std::sqrt(h), 3);

  GofReport report;
  report.kind = GofKind::chi_square;
  report.statistic = statistic;
  report.sample_size = hist.total_pairs;
  report.threshold = threshold.value_or(critical);
  report.pass = report.statistic <= report.threshold;
  return report;
}

std::vector<std::uint64_t> pair_counts_in_region(
    const LatticePointSet& set, std::span<const theory::Lambda> lams,
    const PairOptions& options) {
  const PointList points =
      enumerate_within(set, options.max_points, "pair count in region");
  const std::uint64_t n_points = points.size();
  if (lams.empty()) return {};

  // Distinct distance thresholds (lambda R)^2 in increasing order; bucket k
  // holds pairs with threshold[k-1] < d2 <= threshold[k].
  std::vector<double> thresholds;
  for (const auto& l : lams) {
    const double t = l.value() * set.radius();
    thresholds.push_back(t * t);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  std::vector<std::uint64_t> cumulative(thresholds.size(), 0);
  if (n_points >= 2) {
    const BucketMap bucket(max_squared_distance(set.radius()),
                           [thresholds](std::int64_t d2) {
                             return static_cast<std::size_t>(
                                 std::lower_bound(thresholds.begin(),
                                                  thresholds.end(),
                                                  static_cast<double>(d2)) -
                                 thresholds.begin());
                           });
    const auto counts = bucket_all_pairs(points, thresholds.size() + 1, bucket,
                                         options.workers);
    std::uint64_t running = 0;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      running += counts[k];
      cumulative[k] = running;
    }
  }

  std::vector<std::uint64_t> result;
  result.reserve(lams.size());
  for (const auto& l : lams) {
    const double t = l.value() * set.radius();
    const auto k = static_cast<std::size_t>(
        std::lower_bound(thresholds.begin(), thresholds.end(), t * t) -
        thresholds.begin());
    // Diagonal pairs plus both orders of each unordered pair.
    result.push_back(n_points + 2 * cumulative[k]);
  }
  return result;
}

std::uint64_t pair_count_in_region(const LatticePointSet& set,
                                   theory::Lambda lam,
                                   const PairOptions& options) {
  const theory::Lambda single[] = {lam};
  return pair_counts_in_region(set, single, options).front();
}

void write_histogram_csv(std::ostream& out, const PairHistogram& hist,
                         const theory::DistributionSpec& spec) {
  out << "bin_left,bin_right,count,relative_frequency,theory_pdf_at_midpoint\n";
  for (std::size_t b = 0; b < hist.bins(); ++b) {
    const double left = hist.bin_edges[b];
    const double right = hist.bin_edges[b + 1];
    const double mid = std::clamp(0.5 * (left + right), 0.0, 2.0);
    out << format_double(left) << ',' << format_double(right) << ','
        << hist.counts[b] << ',' << format_double(hist.relative_frequency(b))
        << ',' << format_double(theory::pdf(spec, theory::Lambda(mid))) << '\n';
  }
}

const char* to_string(GofKind kind) noexcept {
  return kind == GofKind::ks ? "ks" : "chi_square";
}

const char* to_string(HistogramMode mode) noexcept {
  return mode == HistogramMode::exact ? "exact" : "sampled";
}

nlohmann::ordered_json to_json(const GofReport& report) {
  return {{"kind", to_string(report.kind)},
          {"statistic", report.statistic},
          {"sample_size", report.sample_size},
          {"threshold", report.threshold},
          {"pass", report.pass}};
}

}  // namespace paircorr::empirical
