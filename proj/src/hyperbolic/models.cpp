#include "hullvol/hyperbolic/models.hpp"

#include <cmath>

#include "hullvol/error.hpp"

namespace hullvol::hyper {

namespace {

constexpr Vec3 kPole{1.0, 0.0, 0.0};

// Inversion in the sphere of radius sqrt(2) about kPole; an involution.
Vec3 invert(Vec3 u) noexcept {
  const Vec3 w = u - kPole;
  return kPole + (2.0 / dot(w, w)) * w;
}

bool finite(Vec3 v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

}  // namespace

BallPoint::BallPoint(Vec3 p) : p_(p) {
  if (!finite(p) || !(dot(p, p) < 1.0)) throw Error(ErrorKind::ModelDomainViolation, "ball point needs |p| < 1");
}

KleinPoint::KleinPoint(Vec3 k) : k_(k) {
  if (!finite(k) || !(dot(k, k) < 1.0)) throw Error(ErrorKind::ModelDomainViolation, "Klein point needs |k| < 1");
}

UHSPoint::UHSPoint(Complex z, double h) : z_(z), h_(h) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(h) || !(h > 0.0))
    throw Error(ErrorKind::ModelDomainViolation, "upper half-space point needs height > 0");
}

UHSPoint ball_to_uhs(const BallPoint& p) {
  const Vec3 u = invert(p.coords());
  return UHSPoint(Complex(u.y, u.z), -u.x);
}

BallPoint uhs_to_ball(const UHSPoint& p) {
  return BallPoint(invert(Vec3{-p.height(), p.base().real(), p.base().imag()}));
}

KleinPoint ball_to_klein(const BallPoint& p) {
  const Vec3 v = p.coords();
  return KleinPoint((2.0 / (1.0 + dot(v, v))) * v);
}

BallPoint klein_to_ball(const KleinPoint& k) {
  const Vec3 v = k.coords();
  return BallPoint((1.0 / (1.0 + std::sqrt(1.0 - dot(v, v)))) * v);
}

Vec3 plane_to_sphere(const ExtPoint& z) noexcept {
  if (z.is_infinite()) return kPole;
  return invert(Vec3{0.0, z.value().real(), z.value().imag()});
}

ExtPoint sphere_to_plane(Vec3 v) {
  const Vec3 w = v - kPole;
  if (dot(w, w) == 0.0) return ExtPoint::infinity();
  const Vec3 u = invert(v);
  return ExtPoint(Complex(u.y, u.z));
}

double hyperbolic_distance(const BallPoint& p, const BallPoint& q) noexcept {
  const Vec3 a = p.coords(), b = q.coords();
  const Vec3 d = a - b;
  const double den = (1.0 - dot(a, a)) * (1.0 - dot(b, b));
  return 2.0 * std::asinh(std::sqrt(dot(d, d) / den));
}

double hyperbolic_distance(const UHSPoint& p, const UHSPoint& q) noexcept {
  const double dz = std::norm(p.base() - q.base());
  const double dh = p.height() - q.height();
  return 2.0 * std::asinh(std::sqrt(dz + dh * dh) / (2.0 * std::sqrt(p.height() * q.height())));
}

UHSPoint poincare_extension(const MobiusMap& m, const UHSPoint& p) {
  // Quaternion action (aP + b)(cP + d)^-1 on P = z + h j, with ad - bc = 1.
  const Complex z = p.base();
  const double h = p.height();
  const Complex cz_d = m.c() * z + m.d();
  const double den = std::norm(cz_d) + std::norm(m.c()) * h * h;
  const Complex zz = ((m.a() * z + m.b()) * std::conj(cz_d) + m.a() * std::conj(m.c()) * h * h) / den;
  return UHSPoint(zz, h / den);
}

}  // namespace hullvol::hyper
