#ifndef HULLVOL_TUBE_TUBE_HPP
#define HULLVOL_TUBE_TUBE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hullvol/hyperbolic/ext_point.hpp"
#include "hullvol/hyperbolic/models.hpp"
#include "hullvol/simd/kernels.hpp"

namespace hullvol::tube {

using hyper::BallPoint;
using hyper::Vec3;

/// Euclidean gap sigma of the sphere of radius 1 - sigma, paired with the horosphere height
/// t = (2 - sigma) / sigma of the upper half-space picture (sigma = 2 / (t + 1)).
class ShellParams {
 public:
  /// Throws ParameterOutOfRange unless 0 < sigma < 1.
  static ShellParams from_sigma(double sigma);
  /// Throws ParameterOutOfRange unless t > 1.
  static ShellParams from_t(double t);

  double sigma() const noexcept { return sigma_; }
  double t() const noexcept { return t_; }

 private:
  ShellParams(double sigma, double t) : sigma_(sigma), t_(t) {}
  double sigma_;
  double t_;
};

/// Convex hull of the hyperbolic ball of radius delta about the origin and the ideal point `axis`.
class CuspCone {
 public:
  /// Throws ParameterOutOfRange unless delta > 0 and |axis| = 1 within 1e-12.
  CuspCone(double delta, Vec3 axis);

  double delta() const noexcept { return delta_; }
  Vec3 axis() const noexcept { return axis_; }
  /// Radius of the hyperbolic ball in the Klein model, tanh(delta).
  double klein_radius() const noexcept { return klein_radius_; }
  simd::ConeKernel kernel() const noexcept;

 private:
  double delta_;
  Vec3 axis_;
  double klein_radius_;
};

/// Horosphere tail integral int_t^inf y^-2 dy / y = 1 / (2 t^2) of the unit-width reference tube.
/// Throws ParameterOutOfRange for t < 1.
double tail_volume_closed(double t);

/// In the Klein model the cone is the Euclidean hull of a ball and a point on the unit sphere.
bool cone_membership(const BallPoint& p, const CuspCone& cone) noexcept;

struct VolumeEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double sigma_cut = 0.0;  ///< outer cutoff: the region stops at radius 1 - sigma_cut
};

/// Outer cutoff used by tail_volume_mc, as a fraction of sigma.
inline constexpr double kCutoffFraction = 1.0 / 64.0;
inline constexpr int kRadialStrata = 64;
inline constexpr std::uint64_t kMinSamples = 1000;

/// Monte Carlo hyperbolic volume of the cone between radii 1 - sigma and 1 - sigma/64.
/// Radially stratified (geometric strata in 1 - |p|); directions drawn from a spherical cap
/// that covers the cone's cross-section. Deterministic in (cone, shell, n, seed).
/// Throws SampleBudgetTooSmall for n < 1000.
VolumeEstimate tail_volume_mc(const CuspCone& cone, const ShellParams& shell, std::uint64_t n, std::uint64_t seed);

struct CrossSection {
  double proxy = 0.0;     ///< 1 - sqrt(1 - sigma^2)
  double measured = 0.0;  ///< arc radius of the cone's cap on the sphere of radius 1 - sigma
};

/// Angular radius (seen from the origin) of the cone's cross-section at ball radius rho;
/// pi when the sphere of that radius lies inside the hyperbolic ball.
double cap_angle(double rho, double delta);

/// Throws ParameterOutOfRange unless 0 <= sigma < 1 and delta > 0.
CrossSection cross_section_radius(double sigma, double delta);
CrossSection cross_section_radius(const ShellParams& shell, double delta);

/// Chordal distance between where the rays to x and y cross the sphere of radius 1 - sigma:
/// exactly (1 - sigma) |x - y|.
double ray_distance(Vec3 x, Vec3 y, double sigma) noexcept;
/// Same, for boundary points of the extended plane (chordal metric of the Riemann sphere).
double ray_distance(const hyper::ExtPoint& x, const hyper::ExtPoint& y, double sigma) noexcept;

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;  ///< log-space
  double r2 = 0.0;
};

/// Least-squares fit of log(value) against log(sigma). Needs at least 4 pairs (ParameterOutOfRange)
/// with positive entries (NonpositiveValue).
ExponentFit fit_exponent(std::span<const std::pair<double, double>> pairs);

/// Geometric mean of value / sigma^2: the delta-dependent constant in V ~ C sigma^2.
double calibration_constant(std::span<const std::pair<double, double>> pairs);

}  // namespace hullvol::tube

#endif  // HULLVOL_TUBE_TUBE_HPP
