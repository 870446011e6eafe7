#pragma once

// Integer and primitive lattice points inside an n-ball, with empirical
// checks of the radial growth and angular (wedge) equidistribution
// conditions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace paircorr::pointsets {

enum class PointKind { integer, primitive };
enum class Boundary { open, closed };

// Upper bound on the number of points a single enumeration may touch.
struct EnumerationBudget {
  std::uint64_t max_points = 50'000'000;
};

class LatticePointSet {
 public:
  LatticePointSet(int n, double radius, PointKind kind,
                  Boundary boundary = Boundary::closed);

  int dimension() const noexcept { return n_; }
  double radius() const noexcept { return radius_; }
  PointKind kind() const noexcept { return kind_; }
  Boundary boundary() const noexcept { return boundary_; }

  // Same set with a different radius.
  LatticePointSet with_radius(double radius) const;

  // Does x (with |x|^2 = norm2) lie inside the ball under this boundary?
  bool contains_norm2(std::int64_t norm2) const noexcept;

 private:
  int n_;
  double radius_;
  PointKind kind_;
  Boundary boundary_;
};

// Points stored row-major: point i occupies coords[i*n, (i+1)*n).
struct PointList {
  int dimension = 0;
  std::vector<std::int32_t> coords;

  std::size_t size() const noexcept {
    return dimension == 0 ? 0 : coords.size() / dimension;
  }
  std::span<const std::int32_t> operator[](std::size_t i) const noexcept {
    return {coords.data() + i * dimension, static_cast<std::size_t>(dimension)};
  }
};

using PointVisitor = std::function<void(std::span<const std::int32_t>)>;

// Rough point count (ball volume times R^n), used for budget checks.
double estimated_points(int n, double radius);

bool is_primitive(std::span<const std::int32_t> x) noexcept;

// Calls visit once per qualifying point in lexicographic order. Throws
// ResourceError when the estimated count exceeds the budget.
void visit_points(const LatticePointSet& set, const PointVisitor& visit,
                  const EnumerationBudget& budget = {});

PointList enumerate(const LatticePointSet& set,
                    const EnumerationBudget& budget = {});

// Number of points without materializing them. Integer counts sum row
// lengths analytically; primitive counts use Moebius inversion over the
// integer counts of the shrunken balls.
std::uint64_t count(const LatticePointSet& set,
                    const EnumerationBudget& budget = {});

// N(r lambda) / (N(r) lambda^n) with the open-ball convention N(r) = #{|x| < r}.
// Throws DomainError when N(r) = 0.
double radial_check(PointKind kind, int n, double r, double lam,
                    const EnumerationBudget& budget = {});

// Spherical cap {x : angle(x, axis) <= half_angle} truncated at radius.
class WedgeSpec {
 public:
  WedgeSpec(std::vector<double> axis, double half_angle, double radius);

  const std::vector<double>& axis() const noexcept { return axis_; }
  double half_angle() const noexcept { return half_angle_; }
  double radius() const noexcept { return radius_; }

 private:
  std::vector<double> axis_;
  double half_angle_;
  double radius_;
};

// Fraction of S^{n-1} within half_angle of a pole:
// (1/2) I_{sin^2 t}((n-1)/2, 1/2) for t <= pi/2, mirrored above.
double cap_measure(int n, double half_angle);

// Number of nonzero points of set (restricted to |x| within wedge.radius)
// whose direction lies in the wedge's cap.
std::uint64_t wedge_count(const LatticePointSet& set, const WedgeSpec& wedge,
                          const EnumerationBudget& budget = {});

// (|T cap W| / N) / cap_measure, counted over nonzero points: the origin has
// no direction. Requires wedge.radius <= set.radius.
double wedge_check(const LatticePointSet& set, const WedgeSpec& wedge,
                   const EnumerationBudget& budget = {});

// One point per line, coordinates separated by single spaces.
void write_points(std::ostream& out, const PointList& points);

}  // namespace paircorr::pointsets
