#include "hullvol/planar/circle.hpp"

#include <cmath>
#include <vector>

#include "hullvol/hyperbolic/mobius.hpp"

namespace hullvol::planar {

namespace {

CircleParams circle_through(Complex a, Complex b, Complex c) {
  CircleParams out;
  const Complex u = b - a, v = c - a;
  const double area2 = u.real() * v.imag() - u.imag() * v.real();
  if (std::abs(area2) <= 1e-14 * std::abs(u) * std::abs(v)) {
    out.is_line = true;
    out.point = a;
    out.direction = u / std::abs(u);
    return out;
  }
  // Circumcenter relative to a.
  const double uu = std::norm(u), vv = std::norm(v);
  const Complex rel((v.imag() * uu - u.imag() * vv) / (2.0 * area2), (u.real() * vv - v.real() * uu) / (2.0 * area2));
  out.center = a + rel;
  out.radius = std::abs(rel);
  return out;
}

}  // namespace

CircleVerdict circle_test(std::span<const Complex> points, double tol) {
  CircleVerdict verdict;
  std::vector<std::size_t> triple;
  std::size_t next = 0;
  for (; next < points.size() && triple.size() < 3; ++next) {
    bool distinct = true;
    for (std::size_t k : triple) distinct = distinct && points[k] != points[next];
    if (distinct) triple.push_back(next);
  }
  if (triple.size() < 3) {
    // Fewer than three distinct points always lie on a line (or are a single point).
    if (!triple.empty()) verdict.circle.center = verdict.circle.point = points[triple[0]];
    if (triple.size() == 2) {
      const Complex u = points[triple[1]] - points[triple[0]];
      verdict.circle.is_line = true;
      verdict.circle.direction = u / std::abs(u);
    }
    return verdict;
  }
  const Complex a = points[triple[0]], b = points[triple[1]], c = points[triple[2]];
  verdict.circle = circle_through(a, b, c);
  for (std::size_t i = next; i < points.size(); ++i) {
    const Complex p = points[i];
    if (p == a || p == b || p == c) continue;
    const Complex z = hyper::cross_ratio(a, b, c, p);
    if (std::abs(z.imag()) > tol) {
      verdict.on_circle = false;
      verdict.witness = Witness{{triple[0], triple[1], triple[2], i}, {a, b, c, p}, z};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace hullvol::planar
