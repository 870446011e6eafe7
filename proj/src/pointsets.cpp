#include "paircorr/pointsets.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "paircorr/errors.hpp"
#include "paircorr/specfun.hpp"
#include "paircorr/theory.hpp"

namespace paircorr::pointsets {
namespace {

// Ball membership for points y of the lattice scaled by sqrt(scale2):
// scale2 * |y|^2 compared against radius^2. scale2 = 1 is the plain lattice.
struct ScaledBall {
  double radius2;
  double scale2;
  bool open;

  bool fits(double norm2) const noexcept {
    const double v = norm2 * scale2;
    return open ? v < radius2 : v <= radius2;
  }

  // Largest m >= 0 with partial + m^2 inside, or -1 if even m = 0 is not.
  std::int64_t max_abs(std::int64_t partial) const noexcept {
    if (!fits(static_cast<double>(partial))) return -1;
    const double room = radius2 / scale2 - static_cast<double>(partial);
    auto m = static_cast<std::int64_t>(std::floor(std::sqrt(std::max(room, 0.0))));
    while (m > 0 && !fits(static_cast<double>(partial + m * m))) --m;
    while (fits(static_cast<double>(partial + (m + 1) * (m + 1)))) ++m;
    return m;
  }
};

ScaledBall ball_of(const LatticePointSet& set, std::int64_t scale = 1) {
  return {set.radius() * set.radius(), static_cast<double>(scale * scale),
          set.boundary() == Boundary::open};
}

void check_budget(double estimate, const EnumerationBudget& budget,
                  const char* what) {
  if (estimate > static_cast<double>(budget.max_points)) {
    throw ResourceError(std::string(what) + ": estimated " +
                            std::to_string(static_cast<std::uint64_t>(estimate)) +
                            " points exceeds budget of " +
                            std::to_string(budget.max_points),
                        static_cast<std::uint64_t>(estimate));
  }
}

template <class Emit>
void walk(const ScaledBall& ball, int n, std::vector<std::int32_t>& coords,
          int level, std::int64_t partial, Emit& emit) {
  const std::int64_t m = ball.max_abs(partial);
  if (m < 0) return;
  for (std::int64_t x = -m; x <= m; ++x) {
    coords[level] = static_cast<std::int32_t>(x);
    if (level + 1 == n) {
      emit(std::span<const std::int32_t>(coords));
    } else {
      walk(ball, n, coords, level + 1, partial + x * x, emit);
    }
  }
}

std::uint64_t count_integer(const ScaledBall& ball, int n, int level,
                            std::int64_t partial) {
  const std::int64_t m = ball.max_abs(partial);
  if (m < 0) return 0;
  if (level + 1 == n) return static_cast<std::uint64_t>(2 * m + 1);
  std::uint64_t total = 0;
  for (std::int64_t x = -m; x <= m; ++x) {
    total += count_integer(ball, n, level + 1, partial + x * x);
  }
  return total;
}

std::vector<int> moebius_table(std::int64_t limit) {
  std::vector<int> mu(static_cast<std::size_t>(limit + 1), 1);
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  if (limit >= 0) mu[0] = 0;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::int64_t k = p; k <= limit; k += p) {
      if (k > p) composite[k] = true;
      mu[k] = -mu[k];
    }
    for (std::int64_t k = p * p; k <= limit; k += p * p) mu[k] = 0;
  }
  return mu;
}

struct WedgeTally {
  std::uint64_t in_cap = 0;
  std::uint64_t nonzero = 0;
};

WedgeTally tally_wedge(const LatticePointSet& set, const WedgeSpec& wedge,
                       const EnumerationBudget& budget) {
  const int n = set.dimension();
  if (static_cast<int>(wedge.axis().size()) != n) {
    throw DomainError("wedge axis has dimension " +
                      std::to_string(wedge.axis().size()) + ", set has " +
                      std::to_string(n));
  }
  if (wedge.radius() > set.radius()) {
    throw DomainError("wedge radius exceeds the point set radius");
  }
  const bool whole_sphere = wedge.half_angle() >= std::numbers::pi;
  const double cos_half = std::cos(wedge.half_angle());
  const auto& axis = wedge.axis();

  WedgeTally tally;
  visit_points(
      set.with_radius(wedge.radius()),
      [&](std::span<const std::int32_t> x) {
        std::int64_t norm2 = 0;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) {
          norm2 += static_cast<std::int64_t>(x[i]) * x[i];
          dot += x[i] * axis[i];
        }
        if (norm2 == 0) return;
        ++tally.nonzero;
        if (whole_sphere ||
            dot >= std::sqrt(static_cast<double>(norm2)) * cos_half) {
          ++tally.in_cap;
        }
      },
      budget);
  return tally;
}

}  // namespace

LatticePointSet::LatticePointSet(int n, double radius, PointKind kind,
                                 Boundary boundary)
    : n_(n), radius_(radius), kind_(kind), boundary_(boundary) {
  if (n < 1) {
    throw DomainError("dimension must be at least 1, got " + std::to_string(n));
  }
  if (!(radius >= 0.0) || !std::isfinite(radius) || radius > 1e9) {
    throw DomainError("radius must be finite, nonnegative and at most 1e9, got " +
                      std::to_string(radius));
  }
}

LatticePointSet LatticePointSet::with_radius(double radius) const {
  return LatticePointSet(n_, radius, kind_, boundary_);
}

bool LatticePointSet::contains_norm2(std::int64_t norm2) const noexcept {
  return ball_of(*this).fits(static_cast<double>(norm2));
}

double estimated_points(int n, double radius) {
  return theory::unit_ball_volume(n) * std::pow(radius, n);
}

bool is_primitive(std::span<const std::int32_t> x) noexcept {
  std::int64_t g = 0;
  for (auto c : x) {
    g = std::gcd(g, static_cast<std::int64_t>(c));
    if (g == 1) return true;
  }
  return false;
}

void visit_points(const LatticePointSet& set, const PointVisitor& visit,
                  const EnumerationBudget& budget) {
  check_budget(estimated_points(set.dimension(), set.radius()), budget,
               "enumerate");
  const ScaledBall ball = ball_of(set);
  std::vector<std::int32_t> coords(set.dimension(), 0);
  if (set.kind() == PointKind::integer) {
    walk(ball, set.dimension(), coords, 0, 0, visit);
  } else {
    auto filtered = [&](std::span<const std::int32_t> x) {
      if (is_primitive(x)) visit(x);
    };
    walk(ball, set.dimension(), coords, 0, 0, filtered);
  }
}

PointList enumerate(const LatticePointSet& set,
                    const EnumerationBudget& budget) {
  PointList list;
  list.dimension = set.dimension();
  list.coords.reserve(static_cast<std::size_t>(
      std::min(estimated_points(set.dimension(), set.radius()) * 1.1 + 16.0,
               static_cast<double>(budget.max_points))) *
      set.dimension());
  visit_points(
      set,
      [&](std::span<const std::int32_t> x) {
        list.coords.insert(list.coords.end(), x.begin(), x.end());
      },
      budget);
  return list;
}

std::uint64_t count(const LatticePointSet& set,
                    const EnumerationBudget& budget) {
  const int n = set.dimension();
  if (n > 1) {
    check_budget(estimated_points(n - 1, set.radius()), budget, "count");
  }
  if (set.kind() == PointKind::integer) {
    return count_integer(ball_of(set), n, 0, 0);
  }
  // Each nonzero x is uniquely g * y with y primitive, g = gcd(x); summing
  // mu(d) over the divisors of g selects g = 1.
  const auto limit = static_cast<std::int64_t>(std::floor(set.radius()));
  const std::vector<int> mu = moebius_table(limit);
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= limit; ++d) {
    if (mu[d] == 0) continue;
    const auto shrunk = static_cast<std::int64_t>(count_integer(ball_of(set, d), n, 0, 0));
    total += mu[d] * (shrunk - 1);
  }
  return static_cast<std::uint64_t>(total);
}

double radial_check(PointKind kind, int n, double r, double lam,
                    const EnumerationBudget& budget) {
  if (!(lam > 0.0)) {
    throw DomainError("radial check needs lambda > 0, got " + std::to_string(lam));
  }
  const LatticePointSet inner(n, r, kind, Boundary::open);
  const std::uint64_t n_r = count(inner, budget);
  if (n_r == 0) {
    throw DomainError("radial check undefined: N(r) = 0 at r = " +
                      std::to_string(r));
  }
  const std::uint64_t n_scaled = count(inner.with_radius(r * lam), budget);
  return static_cast<double>(n_scaled) /
         (static_cast<double>(n_r) * std::pow(lam, n));
}

WedgeSpec::WedgeSpec(std::vector<double> axis, double half_angle, double radius)
    : axis_(std::move(axis)), half_angle_(half_angle), radius_(radius) {
  if (axis_.empty()) throw DomainError("wedge axis is empty");
  double norm2 = 0.0;
  for (double c : axis_) norm2 += c * c;
  if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw DomainError("wedge axis must be a unit vector");
  }
  if (!(half_angle > 0.0 && half_angle <= std::numbers::pi)) {
    throw DomainError("wedge half-angle must lie in (0, pi], got " +
                      std::to_string(half_angle));
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("wedge radius must be positive");
  }
}

double cap_measure(int n, double half_angle) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (!(half_angle > 0.0 && half_angle <= std::numbers::pi)) {
    throw DomainError("cap half-angle must lie in (0, pi], got " +
                      std::to_string(half_angle));
  }
  if (half_angle >= std::numbers::pi) return 1.0;
  if (n == 1) return 0.5;
  const double s = std::sin(half_angle);
  const double half_cap =
      0.5 * specfun::reg_inc_beta(s * s, specfun::BetaParams((n - 1) / 2.0, 0.5));
  return half_angle <= std::numbers::pi / 2 ? half_cap : 1.0 - half_cap;
}

std::uint64_t wedge_count(const LatticePointSet& set, const WedgeSpec& wedge,
                          const EnumerationBudget& budget) {
  return tally_wedge(set, wedge, budget).in_cap;
}

double wedge_check(const LatticePointSet& set, const WedgeSpec& wedge,
                   const EnumerationBudget& budget) {
  const WedgeTally tally = tally_wedge(set, wedge, budget);
  if (tally.nonzero == 0) {
    throw DomainError("wedge check undefined: no nonzero points within radius");
  }
  const double fraction =
      static_cast<double>(tally.in_cap) / static_cast<double>(tally.nonzero);
  return fraction / cap_measure(set.dimension(), wedge.half_angle());
}

void write_points(std::ostream& out, const PointList& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << p[k];
    }
    out << '\n';
  }
}

}  // namespace paircorr::pointsets
