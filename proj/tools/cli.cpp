#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "paircorr/empirical.hpp"
#include "paircorr/errors.hpp"
#include "paircorr/format.hpp"
#include "paircorr/oracle.hpp"
#include "paircorr/pointsets.hpp"
#include "paircorr/theory.hpp"

namespace paircorr::cli {
namespace {

using json = nlohmann::ordered_json;
using pointsets::Boundary;
using pointsets::PointKind;

constexpr int kExitFailedCriterion = 1;
constexpr int kExitError = 2;

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 42;
  unsigned workers = 0;
};

struct SetOptions {
  int n = 2;
  double radius = 10.0;
  PointKind kind = PointKind::integer;
  Boundary boundary = Boundary::closed;
};

const std::map<std::string, PointKind> kKinds{{"integer", PointKind::integer},
                                              {"primitive", PointKind::primitive}};
const std::map<std::string, Boundary> kBoundaries{{"open", Boundary::open},
                                                  {"closed", Boundary::closed}};

const char* kind_name(PointKind k) {
  return k == PointKind::integer ? "integer" : "primitive";
}
const char* boundary_name(Boundary b) {
  return b == Boundary::open ? "open" : "closed";
}

std::uint64_t exact_point_cap(std::optional<std::uint64_t> flag,
                              std::uint64_t fallback = empirical::kDefaultMaxPoints) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PAIRCORR_BUDGET_POINTS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          std::string("PAIRCORR_BUDGET_POINTS is not an integer: ") + env);
    }
  }
  return fallback;
}

// Provenance: everything that determines the output bytes. --out and
// --workers are deliberately absent; they never change the content.
json make_meta(const std::string& command, json flags, std::uint64_t seed) {
  json meta;
  meta["tool"] = "paircorr";
  meta["version"] = kVersion;
  meta["command"] = command;
  meta["flags"] = std::move(flags);
  meta["seed"] = seed;
  return meta;
}

void write_meta_comment(std::ostream& os, const json& meta) {
  os << "# meta " << meta.dump() << '\n';
}

// Either the --out file or the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", common.out, "Output file (default: stdout)");
  sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  sub->add_option("--workers", common.workers, "Worker threads (0 = auto)")
      ->capture_default_str();
}

void add_set_options(CLI::App* sub, SetOptions& set, bool radius_required) {
  sub->add_option("--n", set.n, "Dimension")->required()->check(CLI::Range(1, 64));
  auto* r = sub->add_option("--R,--r", set.radius, "Ball radius")
                ->check(CLI::NonNegativeNumber);
  if (radius_required) r->required();
  sub->add_option("--kind", set.kind, "integer or primitive")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  sub->add_option("--boundary", set.boundary, "open or closed")
      ->transform(CLI::CheckedTransformer(kBoundaries, CLI::ignore_case));
}

json set_flags(const SetOptions& s) {
  return {{"n", s.n},
          {"R", s.radius},
          {"kind", kind_name(s.kind)},
          {"boundary", boundary_name(s.boundary)}};
}

// ---------------------------------------------------------------- theory

struct TheoryOptions {
  int n = 2;
  int grid = 201;
  std::string what = "both";
};

int run_theory(const TheoryOptions& opt, const CommonOptions& common,
               std::ostream& out) {
  const auto spec = theory::DistributionSpec::automatic(opt.n);
  const bool want_pdf = opt.what != "cdf";
  const bool want_cdf = opt.what != "pdf";

  // Odd n has an exact rational pdf; evaluating it exactly and rounding once
  // gives correctly rounded table entries.
  std::optional<theory::RationalPolynomial> poly;
  if (opt.n % 2 == 1 && opt.n <= theory::kMaxPolynomialDimension) {
    poly = theory::pdf_polynomial_odd(opt.n);
  }
  // Grid point i is lambda = 2i / (grid - 1).
  auto exact_lambda = [&](int i) { return theory::Rational(2 * i, opt.grid - 1); };
  auto pdf_at = [&](int i, double l) {
    if (poly) return poly->evaluate(exact_lambda(i)).convert_to<double>();
    return theory::pdf(spec, theory::Lambda(l));
  };
  auto cdf_at = [&](int i, double l) {
    if (poly) {
      return std::min(1.0, poly->integrate(0, exact_lambda(i)).convert_to<double>());
    }
    return theory::cdf(spec, theory::Lambda(l));
  };

  json flags{{"n", opt.n},
             {"grid", opt.grid},
             {"what", opt.what},
             {"format", common.format},
             {"eval_mode", spec.mode() == theory::EvalMode::direct ? "direct"
                                                                   : "log_domain"},
             {"exact_polynomial", poly.has_value()}};
  const json meta = make_meta("theory", flags, common.seed);

  Sink sink(common.out, out);
  auto& os = sink.stream();
  if (common.format == "json") {
    json doc;
    doc["meta"] = meta;
    json rows = json::array();
    for (int i = 0; i < opt.grid; ++i) {
      const double l = 2.0 * i / (opt.grid - 1);
      json row{{"lambda", l}};
      if (want_pdf) row["pdf"] = pdf_at(i, l);
      if (want_cdf) row["cdf"] = cdf_at(i, l);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
    return 0;
  }
  write_meta_comment(os, meta);
  os << "lambda" << (want_pdf ? ",pdf" : "") << (want_cdf ? ",cdf" : "") << '\n';
  for (int i = 0; i < opt.grid; ++i) {
    const double l = 2.0 * i / (opt.grid - 1);
    os << format_double(l);
    if (want_pdf) os << ',' << format_double(pdf_at(i, l));
    if (want_cdf) os << ',' << format_double(cdf_at(i, l));
    os << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- pairs

struct PairsOptions {
  SetOptions set;
  std::string mode = "sampled";
  int bins = empirical::kDefaultBins;
  std::uint64_t samples = 1'000'000;
  std::optional<double> threshold;
  std::optional<std::uint64_t> max_points;
};

json histogram_json(const empirical::PairHistogram& h) {
  return {{"n", h.n},
          {"radius", h.radius},
          {"mode", empirical::to_string(h.mode)},
          {"seed", h.seed},
          {"total_pairs", h.total_pairs},
          {"bin_edges", h.bin_edges},
          {"counts", h.counts}};
}

int run_pairs(const PairsOptions& opt, const CommonOptions& common,
              std::ostream& out, std::ostream& err) {
  const pointsets::LatticePointSet set(opt.set.n, opt.set.radius, opt.set.kind,
                                       opt.set.boundary);
  empirical::PairOptions pair_options;
  pair_options.max_points = exact_point_cap(opt.max_points);
  pair_options.workers = common.workers;

  json flags = set_flags(opt.set);
  flags["mode"] = opt.mode;
  flags["bins"] = opt.bins;
  flags["format"] = common.format;
  if (opt.mode == "sampled") {
    flags["samples"] = opt.samples;
  } else {
    flags["max_points"] = pair_options.max_points;
  }
  if (opt.threshold) flags["threshold"] = *opt.threshold;
  const json meta = make_meta("pairs", flags, common.seed);

  const empirical::PairHistogram hist =
      opt.mode == "exact"
          ? empirical::exact_histogram(set, opt.bins, pair_options)
          : empirical::sampled_histogram(set, opt.bins, opt.samples, common.seed,
                                         pair_options);
  const auto spec = theory::DistributionSpec::automatic(opt.set.n);
  std::optional<empirical::GofReport> gof;
  if (hist.total_pairs > 0) gof = empirical::ks_compare(hist, spec, opt.threshold);

  Sink sink(common.out, out);
  auto& os = sink.stream();
  const json gof_json = gof ? empirical::to_json(*gof) : json(nullptr);
  if (common.format == "json") {
    json doc;
    doc["meta"] = meta;
    doc["histogram"] = histogram_json(hist);
    doc["gof"] = gof_json;
    os << doc.dump(2) << '\n';
  } else {
    write_meta_comment(os, meta);
    os << "# summary "
       << json{{"total_pairs", hist.total_pairs},
               {"mode", empirical::to_string(hist.mode)}}
              .dump()
       << '\n';
    empirical::write_histogram_csv(os, hist, spec);
    json report;
    report["meta"] = meta;
    report["gof"] = gof_json;
    if (common.out.empty()) {
      err << report.dump() << '\n';
    } else {
      std::ofstream gof_file(common.out + ".gof.json", std::ios::binary);
      gof_file << report.dump(2) << '\n';
    }
  }
  if (!gof) {
    err << "warning: histogram has no pairs; goodness of fit not evaluated\n";
    return 0;
  }
  return gof->pass ? 0 : kExitFailedCriterion;
}

// ---------------------------------------------------------------- points

struct PointsOptions {
  SetOptions set;
  bool count_only = false;
  std::optional<std::uint64_t> max_points;
};

int run_points(const PointsOptions& opt, const CommonOptions& common,
               std::ostream& out) {
  const pointsets::LatticePointSet set(opt.set.n, opt.set.radius, opt.set.kind,
                                       opt.set.boundary);
  pointsets::EnumerationBudget budget;
  if (opt.max_points) budget.max_points = *opt.max_points;
  json flags = set_flags(opt.set);
  flags["format"] = common.format;
  flags["count_only"] = opt.count_only;
  const json meta = make_meta("points", flags, common.seed);

  Sink sink(common.out, out);
  auto& os = sink.stream();
  if (opt.count_only) {
    const std::uint64_t total = pointsets::count(set, budget);
    if (common.format == "json") {
      os << json{{"meta", meta}, {"count", total}}.dump(2) << '\n';
    } else {
      write_meta_comment(os, meta);
      os << total << '\n';
    }
    return 0;
  }
  const pointsets::PointList points = pointsets::enumerate(set, budget);
  if (common.format == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = points[i];
      list.push_back(std::vector<std::int32_t>(p.begin(), p.end()));
    }
    os << json{{"meta", meta}, {"count", points.size()}, {"points", list}}.dump()
       << '\n';
  } else {
    write_meta_comment(os, meta);
    pointsets::write_points(os, points);
  }
  return 0;
}

// ---------------------------------------------------------------- checks

struct ChecksOptions {
  std::string which = "all";
  SetOptions set;
  std::optional<double> pair_radius;
  // Unset: 2 for the radial check (lambda = 1 is trivially exact there) and
  // 1 for the volume checks.
  std::optional<double> lambda;
  std::uint64_t samples = 1'000'000;
  std::optional<std::uint64_t> max_points;
  std::optional<std::uint64_t> max_enumeration;
};

// All-pairs cap for the volume checks: n = 3 at the default R = 20 has
// 33,493 points.
constexpr std::uint64_t kChecksMaxPoints = 50'000;

double zeta_int(int s) {
  // Partial sum plus Euler-Maclaurin tail; s >= 2.
  constexpr int kTerms = 1000;
  double sum = 0.0;
  for (int k = kTerms - 1; k >= 1; --k) sum += std::pow(k, -s);
  const double big = kTerms;
  return sum + std::pow(big, 1 - s) / (s - 1) + 0.5 * std::pow(big, -s) +
         s * std::pow(big, -s - 1) / 12.0;
}

double default_pair_radius(int n) {
  if (n <= 2) return 50.0;
  if (n == 3) return 20.0;
  return 10.0;
}

template <class Body>
json attempt(const std::string& name, json params, Body&& body) {
  json check{{"name", name}, {"params", std::move(params)}};
  try {
    body(check);
  } catch (const std::exception& e) {
    check["error"] = e.what();
    check["pass"] = false;
  }
  return check;
}

void grade(json& check, double value, double expected, double tolerance) {
  check["value"] = value;
  check["expected"] = expected;
  check["tolerance"] = tolerance;
  check["pass"] = std::fabs(value - expected) <= tolerance;
}

int run_checks(const ChecksOptions& opt, const CommonOptions& common,
               std::ostream& out) {
  const int n = opt.set.n;
  const double r = opt.set.radius;
  const double radial_lam = opt.lambda.value_or(2.0);
  const double lam = opt.lambda.value_or(1.0);
  const double pair_r = opt.pair_radius.value_or(default_pair_radius(n));
  pointsets::EnumerationBudget budget;
  if (opt.max_enumeration) budget.max_points = *opt.max_enumeration;
  empirical::PairOptions pair_options;
  pair_options.max_points = exact_point_cap(opt.max_points, kChecksMaxPoints);
  pair_options.workers = common.workers;

  json flags = set_flags(opt.set);
  flags["which"] = opt.which;
  flags["radial_lambda"] = radial_lam;
  flags["lambda"] = lam;
  flags["pair_R"] = pair_r;
  flags["samples"] = opt.samples;
  flags["max_points"] = pair_options.max_points;
  flags["max_enumeration"] = budget.max_points;
  json checks = json::array();

  const bool equidist = opt.which == "equidist" || opt.which == "all";
  const bool volume = opt.which == "volume" || opt.which == "all";

  if (equidist) {
    checks.push_back(attempt(
        "radial",
        {{"kind", kind_name(opt.set.kind)}, {"r", r}, {"lambda", radial_lam}},
        [&](json& c) {
          grade(c, pointsets::radial_check(opt.set.kind, n, r, radial_lam, budget),
                1.0, 0.01);
        }));
    const pointsets::LatticePointSet set(n, r, opt.set.kind, opt.set.boundary);
    std::vector<double> axis(static_cast<std::size_t>(n), 0.0);
    axis[0] = 1.0;
    for (double half_angle :
         {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3}) {
      checks.push_back(attempt(
          "wedge", {{"r", r}, {"half_angle", half_angle}}, [&](json& c) {
            const pointsets::WedgeSpec wedge(axis, half_angle, r);
            grade(c, pointsets::wedge_check(set, wedge, budget), 1.0, 0.02);
          }));
    }
    checks.push_back(attempt("primitive_density", {{"R", r}}, [&](json& c) {
      if (n < 2) throw DomainError("primitive density 1/zeta(n) needs n >= 2");
      const pointsets::LatticePointSet integer(n, r, PointKind::integer,
                                               opt.set.boundary);
      const pointsets::LatticePointSet primitive(n, r, PointKind::primitive,
                                                 opt.set.boundary);
      const double ratio =
          static_cast<double>(pointsets::count(primitive, budget)) /
          static_cast<double>(pointsets::count(integer, budget));
      grade(c, ratio, 1.0 / zeta_int(n), 0.01);
    }));
  }

  if (volume) {
    checks.push_back(attempt(
        "mc_region_volume", {{"lambda", lam}, {"samples", opt.samples}},
        [&](json& c) {
          const theory::Lambda l(lam);
          const auto spec = theory::DistributionSpec::automatic(n);
          const auto report = oracle::compare(
              oracle::mc_region_volume(oracle::RegionSpec(n, l), opt.samples,
                                       common.seed, common.workers),
              theory::region_volume(spec, l));
          c["report"] = oracle::to_json(report);
          c["pass"] = report.sigma_distance < 3.0;
        }));
    checks.push_back(attempt(
        "pair_count_in_region", {{"R", pair_r}, {"lambda", lam}}, [&](json& c) {
          const pointsets::LatticePointSet set(n, pair_r, opt.set.kind,
                                               opt.set.boundary);
          const theory::Lambda l(lam);
          const double points =
              static_cast<double>(pointsets::count(set, budget));
          const double pairs = static_cast<double>(
              empirical::pair_count_in_region(set, l, pair_options));
          grade(c, pairs / (points * points),
                theory::cdf(theory::DistributionSpec::automatic(n), l), 0.02);
        }));
  }

  bool all_pass = !checks.empty();
  for (const auto& c : checks) all_pass = all_pass && c.value("pass", false);

  json doc;
  doc["meta"] = make_meta("checks", flags, common.seed);
  doc["checks"] = checks;
  doc["pass"] = all_pass;
  Sink sink(common.out, out);
  sink.stream() << doc.dump(2) << '\n';
  return all_pass ? 0 : kExitFailedCriterion;
}

// ---------------------------------------------------------------- mc

struct McOptions {
  std::string what = "region";
  int n = 2;
  double lambda = 1.0;
  double angle = std::numbers::pi / 3;
  std::uint64_t samples = 1'000'000;
};

int run_mc(const McOptions& opt, const CommonOptions& common, std::ostream& out) {
  json flags{{"what", opt.what}, {"n", opt.n}, {"samples", opt.samples},
             {"format", common.format}};
  oracle::McReport report;
  if (opt.what == "region") {
    flags["lambda"] = opt.lambda;
    const theory::Lambda l(opt.lambda);
    report = oracle::compare(
        oracle::mc_region_volume(oracle::RegionSpec(opt.n, l), opt.samples,
                                 common.seed, common.workers),
        theory::region_volume(theory::DistributionSpec::automatic(opt.n), l));
  } else if (opt.what == "cap") {
    flags["lambda"] = opt.lambda;
    report = oracle::compare(oracle::mc_cap_volume(opt.n, opt.lambda, opt.samples,
                                                   common.seed, common.workers),
                             theory::cap_volume(opt.n, opt.lambda));
  } else {
    flags["angle"] = opt.angle;
    report = oracle::compare(oracle::mc_cap_measure(opt.n, opt.angle, opt.samples,
                                                    common.seed, common.workers),
                             pointsets::cap_measure(opt.n, opt.angle));
  }
  const bool pass = report.sigma_distance < 3.0;
  const json meta = make_meta("mc", flags, common.seed);

  Sink sink(common.out, out);
  auto& os = sink.stream();
  if (common.format == "json") {
    json doc;
    doc["meta"] = meta;
    const json body = oracle::to_json(report);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    doc["pass"] = pass;
    os << doc.dump(2) << '\n';
  } else {
    write_meta_comment(os, meta);
    os << "value,std_error,samples,seed,analytic_value,sigma_distance,pass\n"
       << format_double(report.estimate.value) << ','
       << format_double(report.estimate.std_error) << ','
       << report.estimate.samples << ',' << report.estimate.seed << ','
       << format_double(report.analytic_value) << ','
       << format_double(report.sigma_distance) << ',' << (pass ? "true" : "false")
       << '\n';
  }
  return pass ? 0 : kExitFailedCriterion;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pair-correlation distribution of lattice point sets", "paircorr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;

  TheoryOptions theory_opt;
  auto* theory_cmd = app.add_subcommand("theory", "Tabulate the theoretical pdf/cdf");
  theory_cmd->add_option("--n", theory_opt.n, "Dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  theory_cmd->add_option("--grid", theory_opt.grid, "Grid points on [0, 2]")
      ->check(CLI::Range(2, 100'000'000))
      ->capture_default_str();
  theory_cmd->add_option("--what", theory_opt.what, "pdf, cdf or both")
      ->check(CLI::IsMember({"pdf", "cdf", "both"}))
      ->capture_default_str();
  add_common(theory_cmd, common);

  PairsOptions pairs_opt;
  auto* pairs_cmd = app.add_subcommand("pairs", "Histogram of normalized pair distances");
  add_set_options(pairs_cmd, pairs_opt.set, true);
  pairs_cmd->add_option("--mode", pairs_opt.mode, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}))
      ->capture_default_str();
  pairs_cmd->add_option("--bins", pairs_opt.bins, "Histogram bins on [0, 2]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pairs_cmd->add_option("--samples", pairs_opt.samples, "Sampled pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pairs_cmd->add_option("--threshold", pairs_opt.threshold, "KS pass threshold");
  pairs_cmd->add_option("--max-points", pairs_opt.max_points,
                        "Exact-mode point cap (overrides PAIRCORR_BUDGET_POINTS)");
  add_common(pairs_cmd, common);

  PointsOptions points_opt;
  auto* points_cmd = app.add_subcommand("points", "List or count lattice points");
  add_set_options(points_cmd, points_opt.set, true);
  points_cmd->add_flag("--count-only", points_opt.count_only, "Print only the count");
  points_cmd->add_option("--max-points", points_opt.max_points, "Enumeration budget");
  add_common(points_cmd, common);

  ChecksOptions checks_opt;
  checks_opt.set.radius = 200.0;
  auto* checks_cmd = app.add_subcommand("checks", "Equidistribution and volume checks");
  checks_cmd->add_option("--which", checks_opt.which, "equidist, volume or all")
      ->check(CLI::IsMember({"equidist", "volume", "all"}))
      ->capture_default_str();
  add_set_options(checks_cmd, checks_opt.set, false);
  checks_cmd->get_option("--n")->required(false);
  checks_cmd->add_option("--pair-R", checks_opt.pair_radius,
                         "Radius for the pair-count check");
  checks_cmd->add_option("--lambda", checks_opt.lambda,
                         "Normalized distance (default 2 radial, 1 volume)")
      ->check(CLI::Range(0.0, 2.0));
  checks_cmd->add_option("--samples", checks_opt.samples, "Monte Carlo samples")
      ->capture_default_str();
  checks_cmd->add_option("--max-points", checks_opt.max_points,
                         "All-pairs point cap (overrides PAIRCORR_BUDGET_POINTS)");
  checks_cmd->add_option("--max-enumeration", checks_opt.max_enumeration,
                         "Point enumeration budget");
  add_common(checks_cmd, common);

  McOptions mc_opt;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo volume estimates");
  mc_cmd->add_option("--what", mc_opt.what, "region, cap or measure")
      ->check(CLI::IsMember({"region", "cap", "measure"}))
      ->capture_default_str();
  mc_cmd->add_option("--n", mc_opt.n, "Dimension")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--lambda", mc_opt.lambda,
                     "Distance (region) or cap parameter r (cap)")
      ->check(CLI::Range(0.0, 2.0))
      ->capture_default_str();
  mc_cmd->add_option("--angle", mc_opt.angle, "Cap half-angle in radians (measure)");
  mc_cmd->add_option("--samples", mc_opt.samples, "Monte Carlo samples")
      ->capture_default_str();
  add_common(mc_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*theory_cmd) return run_theory(theory_opt, common, out);
    if (*pairs_cmd) return run_pairs(pairs_opt, common, out, err);
    if (*points_cmd) return run_points(points_opt, common, out);
    if (*checks_cmd) return run_checks(checks_opt, common, out);
    if (*mc_cmd) return run_mc(mc_opt, common, out);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace paircorr::cli
