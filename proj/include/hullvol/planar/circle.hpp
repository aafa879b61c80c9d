#ifndef HULLVOL_PLANAR_CIRCLE_HPP
#define HULLVOL_PLANAR_CIRCLE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>

namespace hullvol::planar {

using Complex = std::complex<double>;

/// A circle of the extended plane: a Euclidean circle, or a line (a circle through infinity).
/// A set of fewer than two distinct points is recorded as a radius-zero circle at the point.
struct CircleParams {
  bool is_line = false;
  Complex center;       ///< circles
  double radius = 0.0;  ///< circles
  Complex point;        ///< lines: a point on the line
  Complex direction;    ///< lines: unit direction
};

struct Witness {
  std::array<std::size_t, 4> indices{};
  std::array<Complex, 4> points{};
  Complex cross_ratio;  ///< C(points[0], points[1], points[2], points[3]), |Im| > tol
};

struct CircleVerdict {
  bool on_circle = true;
  CircleParams circle;             ///< through the first three distinct points (when on_circle)
  std::optional<Witness> witness;  ///< set iff !on_circle
};

/// Tests whether all points lie on one circle or line. Uses the first three distinct points as
/// the reference triple and reports the first later point p with |Im C(a, b, c, p)| > tol.
CircleVerdict circle_test(std::span<const Complex> points, double tol = 1e-9);

}  // namespace hullvol::planar

#endif  // HULLVOL_PLANAR_CIRCLE_HPP
