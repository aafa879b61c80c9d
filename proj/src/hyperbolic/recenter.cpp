#include "hullvol/hyperbolic/recenter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "hullvol/error.hpp"

namespace hullvol::hyper {

namespace {

double det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

}  // namespace

UHSPoint tetra_center(const ExtPoint& a, const ExtPoint& b, const ExtPoint& c, const ExtPoint& d) {
  if (is_concyclic_ratio(cross_ratio(a, b, c, d)))
    throw Error(ErrorKind::DegenerateQuadruple, "tetrahedron center needs non-concyclic vertices");
  // Frame with a -> 0, b -> inf, c -> 1, d -> z. The half-turn w -> z/w swaps the edges'
  // endpoints; its axis, the geodesic [-sqrt z, sqrt z], is the common perpendicular.
  const MobiusMap frame = MobiusMap::normalizing(a, c, b);
  const Complex z = frame(d).value();
  const double rho = std::sqrt(std::abs(z));
  const Complex dir = std::sqrt(z) / rho;
  const Complex m = 0.5 * (1.0 + z);
  // Foot on [1, z]: the axis point at angle t with |w - m|^2 + h^2 = |z - 1|^2 / 4.
  const double cos_t = (z.real() + std::abs(z)) / (2.0 * rho * (dir * std::conj(m)).real());
  const double t_foot = std::acos(std::clamp(cos_t, -1.0, 1.0));
  // Arclength along the axis is log tan(t/2), zero at the foot (0, rho) on [0, inf].
  const double u_mid = 0.5 * std::log(std::tan(0.5 * t_foot));
  const double t_mid = 2.0 * std::atan(std::exp(u_mid));
  const UHSPoint center(rho * std::cos(t_mid) * dir, rho * std::sin(t_mid));
  return poincare_extension(frame.inverse(), center);
}

bool tetra_contains(const std::array<ExtPoint, 4>& vertices, const UHSPoint& p) {
  // Boundary points coincide in the ball and Klein models.
  std::array<Vec3, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = plane_to_sphere(vertices[i]);
  const Vec3 q = ball_to_klein(uhs_to_ball(p)).coords();
  const double total = det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]);
  if (total == 0.0) return false;
  for (int i = 0; i < 4; ++i) {
    std::array<Vec3, 4> w = v;
    w[i] = q;
    const double part = det3(w[1] - w[0], w[2] - w[0], w[3] - w[0]) / total;
    if (!(part > 0.0)) return false;
  }
  return true;
}

Recentering recenter_hull(std::span<const ExtPoint> points) {
  std::array<std::size_t, 4> quad{};
  std::size_t found = 0;
  std::optional<std::size_t> off_circle;
  for (std::size_t i = 0; i < points.size() && !off_circle; ++i) {
    if (found < 3) {
      bool distinct = true;
      for (std::size_t k = 0; k < found; ++k) distinct = distinct && !(points[quad[k]] == points[i]);
      if (distinct) quad[found++] = i;
      continue;
    }
    if (points[i] == points[quad[0]] || points[i] == points[quad[1]] || points[i] == points[quad[2]]) continue;
    if (!is_concyclic_ratio(cross_ratio(points[quad[0]], points[quad[1]], points[quad[2]], points[i]))) off_circle = i;
  }
  if (!off_circle) throw Error(ErrorKind::ConcyclicInput, "all points lie on one circle; the hull has empty interior");
  quad[3] = *off_circle;

  const UHSPoint center = tetra_center(points[quad[0]], points[quad[1]], points[quad[2]], points[quad[3]]);
  const double s = std::sqrt(center.height());
  const MobiusMap map(1.0 / s, -center.base() / s, 0.0, s);
  return Recentering{map, center, quad};
}

}  // namespace hullvol::hyper
