#include "hullvol/tube/tube.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hullvol/error.hpp"

namespace hullvol::tube {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void out_of_range(const std::string& what) { throw Error(ErrorKind::ParameterOutOfRange, what); }

double unit_draw(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1p-53; }

// Any orthonormal pair completing the unit vector n.
std::pair<Vec3, Vec3> complete_basis(Vec3 n) {
  const Vec3 helper = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 e1 = cross(n, helper);
  e1 = (1.0 / norm(e1)) * e1;
  return {e1, cross(n, e1)};
}

}  // namespace

ShellParams ShellParams::from_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0)) out_of_range("sigma must lie in (0, 1), got " + std::to_string(sigma));
  return ShellParams(sigma, (2.0 - sigma) / sigma);
}

ShellParams ShellParams::from_t(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) out_of_range("t must be finite and > 1, got " + std::to_string(t));
  return ShellParams(2.0 / (t + 1.0), t);
}

CuspCone::CuspCone(double delta, Vec3 axis) : delta_(delta), axis_(axis), klein_radius_(std::tanh(delta)) {
  if (!(delta > 0.0) || !std::isfinite(delta)) out_of_range("cone radius delta must be positive");
  if (!(std::abs(norm(axis) - 1.0) <= 1e-12)) out_of_range("cone axis must be a unit vector");
}

simd::ConeKernel CuspCone::kernel() const noexcept {
  simd::ConeKernel k;
  k.axis = {axis_.x, axis_.y, axis_.z};
  k.radius = klein_radius_;
  k.cos2_half = 1.0 - klein_radius_ * klein_radius_;
  return k;
}

double tail_volume_closed(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) out_of_range("t must be finite and >= 1");
  return 0.5 / (t * t);
}

bool cone_membership(const BallPoint& p, const CuspCone& cone) noexcept {
  // Same arithmetic as the sampling kernel so the two never disagree on a point.
  const Vec3 v = p.coords();
  const Vec3 ax = cone.axis();
  const double a2 = cone.klein_radius() * cone.klein_radius();
  const double pp = (v.x * v.x + v.y * v.y) + v.z * v.z;
  const double s = 2.0 / (1.0 + pp);
  const double qx = s * v.x, qy = s * v.y, qz = s * v.z;
  const double qq = (qx * qx + qy * qy) + qz * qz;
  const double qd = (qx * ax.x + qy * ax.y) + qz * ax.z;
  const double dx = ax.x - qx, dy = ax.y - qy, dz = ax.z - qz;
  const double dd = (dx * dx + dy * dy) + dz * dz;
  const double om = 1.0 - qd;
  return (qq <= a2) || (qd >= a2 && om * om >= (1.0 - a2) * dd);
}

double cap_angle(double rho, double delta) {
  const double a = std::tanh(delta);
  const double k = 2.0 * rho / (1.0 + rho * rho);
  if (k <= a) return kPi;
  return std::asin(a / k) - std::asin(a);
}

CrossSection cross_section_radius(double sigma, double delta) {
  if (!(sigma >= 0.0 && sigma < 1.0)) out_of_range("sigma must lie in [0, 1)");
  if (!(delta > 0.0) || !std::isfinite(delta)) out_of_range("cone radius delta must be positive");
  CrossSection out;
  out.proxy = sigma * sigma / (1.0 + std::sqrt(1.0 - sigma * sigma));
  const double rho = 1.0 - sigma;
  out.measured = rho * cap_angle(rho, delta);
  return out;
}

CrossSection cross_section_radius(const ShellParams& shell, double delta) {
  return cross_section_radius(shell.sigma(), delta);
}

double ray_distance(Vec3 x, Vec3 y, double sigma) noexcept { return (1.0 - sigma) * norm(x - y); }

double ray_distance(const hyper::ExtPoint& x, const hyper::ExtPoint& y, double sigma) noexcept {
  return (1.0 - sigma) * hyper::chordal_distance(x, y);
}

VolumeEstimate tail_volume_mc(const CuspCone& cone, const ShellParams& shell, std::uint64_t n, std::uint64_t seed) {
  if (n < kMinSamples)
    throw Error(ErrorKind::SampleBudgetTooSmall,
                "need at least " + std::to_string(kMinSamples) + " samples, got " + std::to_string(n));

  const double sigma = shell.sigma();
  const double s_lo = sigma * kCutoffFraction;
  const double log_ratio = std::log(sigma / s_lo);
  const auto [e1, e2] = complete_basis(cone.axis());
  const Vec3 ax = cone.axis();
  const simd::ConeKernel kernel = cone.kernel();

  VolumeEstimate out;
  out.sigma_cut = s_lo;
  double variance = 0.0;
  std::vector<double> px, py, pz, w;

  for (int h = 0; h < kRadialStrata; ++h) {
    const std::uint64_t m = n / kRadialStrata + (static_cast<std::uint64_t>(h) < n % kRadialStrata ? 1 : 0);
    // Stratum h covers 1 - rho in [s_lo * e^{(h) L/H}, s_lo * e^{(h+1) L/H}].
    const double s_a = s_lo * std::exp(log_ratio * h / kRadialStrata);
    const double s_b = h + 1 == kRadialStrata ? sigma : s_lo * std::exp(log_ratio * (h + 1) / kRadialStrata);
    const double rho_lo = 1.0 - s_b, rho_hi = 1.0 - s_a;
    const double width = rho_hi - rho_lo;

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h)};
    std::mt19937_64 gen(seq);

    px.resize(m);
    py.resize(m);
    pz.resize(m);
    w.resize(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      const double rho = rho_lo + width * unit_draw(gen);
      const double cap = std::min(kPi, 1.25 * cap_angle(rho, cone.delta()));
      const double half = std::sin(0.5 * cap);
      const double one_minus_cos_cap = 2.0 * half * half;
      const double u = one_minus_cos_cap * unit_draw(gen);  // 1 - cos(phi), uniform in area
      const double cos_phi = 1.0 - u;
      const double sin_phi = std::sqrt(std::max(0.0, u * (2.0 - u)));
      const double psi = 2.0 * kPi * unit_draw(gen);
      const double c = sin_phi * std::cos(psi), s = sin_phi * std::sin(psi);
      const Vec3 dir = cos_phi * ax + c * e1 + s * e2;
      px[i] = rho * dir.x;
      py[i] = rho * dir.y;
      pz[i] = rho * dir.z;
      w[i] = width * (2.0 * kPi * one_minus_cos_cap) * rho * rho;
    }
    const simd::LaneSums sums = simd::cone_weight_sums(px, py, pz, w, kernel);
    const double md = static_cast<double>(m);
    const double mean = sums.total() / md;
    const double var = std::max(0.0, sums.total_sq() / md - mean * mean) / std::max(1.0, md - 1.0);
    out.mean += mean;
    variance += var;
    out.hits += sums.total_hits();
    out.samples += m;
  }
  out.std_error = std::sqrt(variance);
  return out;
}

ExponentFit fit_exponent(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 4) out_of_range("exponent fit needs at least 4 pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [s, v] : pairs) {
    if (!(s > 0.0) || !(v > 0.0))
      throw Error(ErrorKind::NonpositiveValue, "exponent fit needs positive sigma and value");
    const double x = std::log(s), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double n = static_cast<double>(pairs.size());
  const double cxx = sxx - sx * sx / n, cxy = sxy - sx * sy / n, cyy = syy - sy * sy / n;
  if (!(cxx > 0.0)) out_of_range("exponent fit needs at least two distinct sigma values");
  ExponentFit fit;
  fit.slope = cxy / cxx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r2 = cyy > 0.0 ? (cxy * cxy) / (cxx * cyy) : 1.0;
  return fit;
}

double calibration_constant(std::span<const std::pair<double, double>> pairs) {
  if (pairs.empty()) out_of_range("calibration needs at least one pair");
  double acc = 0.0;
  for (const auto& [s, v] : pairs) {
    if (!(s > 0.0) || !(v > 0.0))
      throw Error(ErrorKind::NonpositiveValue, "calibration needs positive sigma and value");
    acc += std::log(v / (s * s));
  }
  return std::exp(acc / static_cast<double>(pairs.size()));
}

}  // namespace hullvol::tube
