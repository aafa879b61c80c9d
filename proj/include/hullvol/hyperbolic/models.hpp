#ifndef HULLVOL_HYPERBOLIC_MODELS_HPP
#define HULLVOL_HYPERBOLIC_MODELS_HPP

#include <cmath>

#include "hullvol/hyperbolic/ext_point.hpp"
#include "hullvol/hyperbolic/mobius.hpp"

namespace hullvol::hyper {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) noexcept { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) noexcept { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) noexcept { return {s * a.x, s * a.y, s * a.z}; }
  friend double dot(Vec3 a, Vec3 b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }
  friend Vec3 cross(Vec3 a, Vec3 b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  }
  friend double norm(Vec3 a) noexcept { return std::sqrt(dot(a, a)); }
};

// Each model point validates its domain on construction (ModelDomainViolation).

/// Poincare ball model point, |p| < 1.
class BallPoint {
 public:
  explicit BallPoint(Vec3 p);
  Vec3 coords() const noexcept { return p_; }

 private:
  Vec3 p_;
};

/// Klein (projective) model point, |k| < 1. Hyperbolic convexity is Euclidean convexity here.
class KleinPoint {
 public:
  explicit KleinPoint(Vec3 k);
  Vec3 coords() const noexcept { return k_; }

 private:
  Vec3 k_;
};

/// Upper half-space point: horizontal coordinate z over the boundary plane, height h > 0.
class UHSPoint {
 public:
  UHSPoint(Complex z, double h);
  Complex base() const noexcept { return z_; }
  double height() const noexcept { return h_; }

 private:
  Complex z_;
  double h_;
};

// Ball <-> upper half-space through the fixed isometry sending the ball origin to (0, 1)
// and the boundary point e1 = (1,0,0) to infinity (inversion about e1 with radius sqrt 2).
UHSPoint ball_to_uhs(const BallPoint& p);
BallPoint uhs_to_ball(const UHSPoint& p);

KleinPoint ball_to_klein(const BallPoint& p);
BallPoint klein_to_ball(const KleinPoint& k);

/// Boundary extension of the ball/UHS isometry: unit sphere <-> extended plane.
Vec3 plane_to_sphere(const ExtPoint& z) noexcept;
ExtPoint sphere_to_plane(Vec3 v);

double hyperbolic_distance(const BallPoint& p, const BallPoint& q) noexcept;
double hyperbolic_distance(const UHSPoint& p, const UHSPoint& q) noexcept;

/// Isometric action of a Moebius map on upper half-space (Poincare extension).
UHSPoint poincare_extension(const MobiusMap& m, const UHSPoint& p);

}  // namespace hullvol::hyper

#endif  // HULLVOL_HYPERBOLIC_MODELS_HPP
