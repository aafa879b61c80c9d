#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hullvol/error.hpp"
#include "hullvol/hyperbolic/models.hpp"
#include "hullvol/tube/tube.hpp"
#include "support.hpp"

using namespace hullvol;
using namespace hullvol::tube;
using hyper::ExtPoint;

using testing::kind_of;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 unit(Vec3 v) { return (1.0 / norm(v)) * v; }

Vec3 random_unit(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  return unit({n(g), n(g), n(g)});
}

// Independent membership oracle: q (Klein) lies in hull(B(0, a), x) iff some s in [0, 1] has
// |q - s x| <= (1 - s) a. The gap is convex in s, so a ternary search finds its minimum.
bool oracle_inside_klein(Vec3 q, Vec3 x, double a) {
  auto gap = [&](double s) { return norm(q - s * x) - (1.0 - s) * a; };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (gap(m1) <= gap(m2)) hi = m2;
    else lo = m1;
  }
  return std::min({gap(0.0), gap(0.5 * (lo + hi))}) <= 0.0;
}

bool oracle_inside_ball(Vec3 p, Vec3 x, double delta) {
  const double pp = dot(p, p);
  return oracle_inside_klein((2.0 / (1.0 + pp)) * p, x, std::tanh(delta));
}

// Angular radius of the cone's slice at ball radius rho, by bisection on the oracle.
double oracle_cap(double rho, double delta) {
  const Vec3 x{0.0, 0.0, 1.0};
  auto at = [&](double th) { return Vec3{rho * std::sin(th), 0.0, rho * std::cos(th)}; };
  if (oracle_inside_ball(at(kPi), x, delta)) return kPi;
  double lo = 0.0, hi = kPi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (oracle_inside_ball(at(mid), x, delta) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Volume of the cone between radii 1 - sigma and 1 - sigma/64 by Simpson's rule in log(1 - rho).
double oracle_volume(double sigma, double delta) {
  const int m = 800;
  const double u0 = std::log(sigma / 64.0), u1 = std::log(sigma);
  const double h = (u1 - u0) / m;
  double acc = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double s = std::exp(u0 + i * h);
    const double rho = 1.0 - s;
    const double f = std::pow(2.0 / (1.0 - rho * rho), 3) * rho * rho * 2.0 * kPi *
                     (1.0 - std::cos(oracle_cap(rho, delta))) * s;
    acc += f * (i == 0 || i == m ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  return acc * h / 3.0;
}

const Vec3 kAxis{0.0, 0.0, 1.0};

}  // namespace

TEST_SUITE_BEGIN("tube");

TEST_CASE("sigma and t") {
  CHECK(ShellParams::from_t(3.0).sigma() == 0.5);
  CHECK(ShellParams::from_sigma(0.02).t() == doctest::Approx(99.0).epsilon(1e-15));
  CHECK(kind_of([] { ShellParams::from_sigma(1.0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { ShellParams::from_sigma(0.0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { ShellParams::from_t(1.0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { ShellParams::from_t(INFINITY); }) == ErrorKind::ParameterOutOfRange);

  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 10000; ++i) {
    const ShellParams a = ShellParams::from_sigma(u(g));
    CHECK(std::abs(2.0 / (a.t() + 1.0) - a.sigma()) <= 1e-15 * a.sigma() + 1e-300);
    const ShellParams b = ShellParams::from_t(a.t());
    CHECK(std::abs(b.sigma() - a.sigma()) <= 1e-15 * a.sigma());
    CHECK(std::abs((2.0 - b.sigma()) / b.sigma() - b.t()) <= 1e-15 * b.t());
  }
}

TEST_CASE("closed-form tail") {
  CHECK(tail_volume_closed(1.0) == 0.5);
  CHECK(tail_volume_closed(10.0) == doctest::Approx(1.0 / 200.0).epsilon(1e-15));
  CHECK(tail_volume_closed(1e9) < 1e-18);
  CHECK(kind_of([] { tail_volume_closed(0.5); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("cone validation") {
  CHECK(kind_of([] { CuspCone(0.0, kAxis); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { CuspCone(0.5, {0.0, 0.0, 1.0 + 1e-9}); }) == ErrorKind::ParameterOutOfRange);
  const CuspCone c(0.5, kAxis);
  CHECK(c.klein_radius() == doctest::Approx(std::tanh(0.5)));
  CHECK(c.kernel().cos2_half == doctest::Approx(1.0 - std::tanh(0.5) * std::tanh(0.5)));
}

TEST_CASE("cone membership examples") {
  std::mt19937_64 g(21);
  for (double delta : {0.05, 0.5, 2.0}) {
    for (int i = 0; i < 20; ++i) {
      const Vec3 x = random_unit(g);
      const CuspCone c(delta, x);
      CHECK(cone_membership(BallPoint({0.0, 0.0, 0.0}), c));
      CHECK(cone_membership(BallPoint((1.0 - 1e-6) * x), c));
      CHECK_FALSE(cone_membership(BallPoint(-(1.0 - 1e-6) * x), c));
    }
  }
}

TEST_CASE("cone membership agrees with the hull oracle") {
  std::mt19937_64 g(22);
  int disagreements = 0, inside = 0;
  for (int i = 0; i < 20000; ++i) {
    const double delta = std::uniform_real_distribution<double>(0.05, 2.0)(g);
    const Vec3 x = random_unit(g);
    const BallPoint p = testing::random_ball_point(g, 0.999);
    const bool got = cone_membership(p, CuspCone(delta, x));
    inside += got;
    disagreements += got != oracle_inside_ball(p.coords(), x, delta);
  }
  CHECK(inside > 1000);
  CHECK(disagreements <= 2);  // boundary ties only
}

TEST_CASE("cone is geodesically convex") {
  std::mt19937_64 g(23);
  const CuspCone c(0.5, unit({1.0, 2.0, -0.5}));
  int pairs = 0;
  std::vector<BallPoint> inside;
  while (inside.size() < 400) {
    const BallPoint p = testing::random_ball_point(g, 0.995);
    if (cone_membership(p, c)) inside.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < inside.size(); i += 2) {
    const Vec3 kp = hyper::ball_to_klein(inside[i]).coords(), kq = hyper::ball_to_klein(inside[i + 1]).coords();
    for (int s = 1; s <= 10; ++s) {
      const double f = s / 11.0;
      const BallPoint m = hyper::klein_to_ball(hyper::KleinPoint((1.0 - f) * kp + f * kq));
      CHECK(cone_membership(m, c));
    }
    ++pairs;
  }
  CHECK(pairs == 200);
}

TEST_CASE("cross-section radius") {
  CHECK(cross_section_radius(0.0, 0.5).proxy == 0.0);
  const CrossSection c = cross_section_radius(0.01, 0.5);
  CHECK(c.proxy == doctest::Approx(1.0 - std::sqrt(1.0 - 1e-4)).epsilon(1e-9));
  CHECK(c.proxy == doctest::Approx(5.0e-5).epsilon(1e-4));
  CHECK(std::abs(c.proxy / 1e-4 - 0.5) < 1e-3);
  CHECK(kind_of([] { cross_section_radius(1.0, 0.5); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { cross_section_radius(0.5, 0.0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { cross_section_radius(-0.1, 0.5); }) == ErrorKind::ParameterOutOfRange);

  for (double delta : {0.25, 0.5, 1.0})
    for (double sigma : {0.5, 0.2, 0.1, 0.05, 0.02, 0.005}) {
      const double rho = 1.0 - sigma;
      CHECK(cap_angle(rho, delta) == doctest::Approx(oracle_cap(rho, delta)).epsilon(1e-9));
      CHECK(cross_section_radius(ShellParams::from_sigma(sigma), delta).measured ==
            doctest::Approx(rho * oracle_cap(rho, delta)).epsilon(1e-9));
    }
  // Near the origin the whole sphere is inside the ball.
  CHECK(cap_angle(0.05, 0.5) == kPi);

  std::vector<std::pair<double, double>> proxy, measured;
  for (double sigma : {0.2, 0.1, 0.05, 0.02}) {
    proxy.emplace_back(sigma, cross_section_radius(sigma, 0.5).proxy);
    measured.emplace_back(sigma, cross_section_radius(sigma, 0.5).measured);
  }
  CHECK(std::abs(fit_exponent(proxy).slope - 2.0) <= 0.05);
  CHECK(std::abs(fit_exponent(measured).slope - 2.0) <= 0.2);
}

TEST_CASE("ray distance") {
  std::mt19937_64 g(31);
  const Vec3 x = random_unit(g);
  CHECK(ray_distance(x, x, 0.3) == 0.0);
  CHECK(ray_distance(x, -1.0 * x, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  for (int i = 0; i < 1000; ++i) {
    const Vec3 a = random_unit(g), b = random_unit(g);
    const double sigma = std::uniform_real_distribution<double>(0.0, 1.0)(g);
    CHECK(ray_distance(a, b, sigma) == ray_distance(b, a, sigma));
    // The rays cross the sphere at (1 - sigma) a and (1 - sigma) b.
    CHECK(ray_distance(a, b, sigma) == doctest::Approx(norm((1.0 - sigma) * a - (1.0 - sigma) * b)).epsilon(1e-14));
  }
  const Vec3 a = random_unit(g), b = random_unit(g);
  double prev = 0.0;
  for (double sigma : {0.1, 0.01, 1e-4, 1e-8}) {
    const double r = ray_distance(a, b, sigma) / norm(a - b);
    CHECK(r > prev);
    CHECK(std::abs(r - 1.0) <= 1.01 * sigma);
    prev = r;
  }
  for (int i = 0; i < 200; ++i) {
    const ExtPoint z(testing::random_complex(g)), w(testing::random_complex(g));
    CHECK(ray_distance(z, w, 0.25) ==
          doctest::Approx(ray_distance(hyper::plane_to_sphere(z), hyper::plane_to_sphere(w), 0.25)).epsilon(1e-13));
  }
  CHECK(ray_distance(ExtPoint::infinity(), ExtPoint(0.0), 0.0) == doctest::Approx(2.0));
}

TEST_CASE("exponent fits") {
  std::vector<std::pair<double, double>> exact;
  for (double sigma : {0.2, 0.1, 0.05, 0.02}) exact.emplace_back(sigma, sigma * sigma);
  const ExponentFit f = fit_exponent(exact);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(calibration_constant(exact) == doctest::Approx(1.0));

  auto three = exact;
  three.pop_back();
  CHECK(kind_of([&] { fit_exponent(three); }) == ErrorKind::ParameterOutOfRange);
  auto bad = exact;
  bad[1].second = 0.0;
  CHECK(kind_of([&] { fit_exponent(bad); }) == ErrorKind::NonpositiveValue);
}

TEST_CASE("Monte Carlo volume: budget and determinism") {
  const CuspCone c(0.5, kAxis);
  const ShellParams s = ShellParams::from_sigma(0.1);
  CHECK(kind_of([&] { tail_volume_mc(c, s, 999, 1); }) == ErrorKind::SampleBudgetTooSmall);
  const VolumeEstimate a = tail_volume_mc(c, s, 20000, 42), b = tail_volume_mc(c, s, 20000, 42);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.hits == b.hits);
  CHECK(a.samples >= 20000);
  CHECK(a.sigma_cut == doctest::Approx(0.1 / 64.0));
  CHECK(a.mean >= 0.0);
  CHECK(a.std_error >= 0.0);
  CHECK(tail_volume_mc(c, s, 20000, 43).mean != a.mean);
}

TEST_CASE("Monte Carlo volume matches quadrature") {
  for (double delta : {0.25, 0.5, 1.0})
    for (double sigma : {0.2, 0.05}) {
      const VolumeEstimate e = tail_volume_mc(CuspCone(delta, kAxis), ShellParams::from_sigma(sigma), 100000, 7);
      const double truth = oracle_volume(sigma, delta);
      CHECK(std::abs(e.mean - truth) <= 4.0 * e.std_error);
      CHECK(e.std_error <= 0.02 * truth);
    }
}

TEST_CASE("Monte Carlo volume: seeds agree, shells ordered, sigma^2 scaling") {
  std::mt19937_64 g(99);
  const CuspCone c(0.5, random_unit(g));
  const VolumeEstimate a = tail_volume_mc(c, ShellParams::from_sigma(0.1), 100000, 1);
  const VolumeEstimate b = tail_volume_mc(c, ShellParams::from_sigma(0.1), 100000, 2);
  CHECK(std::abs(a.mean - b.mean) <= 3.0 * std::hypot(a.std_error, b.std_error));

  const VolumeEstimate h = tail_volume_mc(c, ShellParams::from_sigma(0.05), 100000, 1);
  const double ratio = a.mean / h.mean;
  CHECK(ratio >= 4.0 * 0.8);
  CHECK(ratio <= 4.0 * 1.2);

  double prev_mean = INFINITY, prev_se = 0.0;
  for (double sigma : {0.3, 0.2, 0.1, 0.05, 0.02, 0.01}) {
    const VolumeEstimate e = tail_volume_mc(c, ShellParams::from_sigma(sigma), 50000, 3);
    CHECK(prev_mean >= e.mean - 3.0 * std::hypot(prev_se, e.std_error));
    prev_mean = e.mean;
    prev_se = e.std_error;
  }
}

TEST_CASE("Monte Carlo volume: near-empty region") {
  // A thin cone seen through a shell reaching almost to the origin: the volume is a tiny fraction
  // of the delta = 0.5 cone's.
  const VolumeEstimate thin = tail_volume_mc(CuspCone(1e-3, kAxis), ShellParams::from_sigma(0.99), 20000, 5);
  const VolumeEstimate fat = tail_volume_mc(CuspCone(0.5, kAxis), ShellParams::from_sigma(0.99), 20000, 5);
  CHECK(thin.mean <= 1e-4 * fat.mean + 3.0 * thin.std_error);
  CHECK(std::abs(thin.mean - oracle_volume(0.99, 1e-3)) <= 4.0 * thin.std_error + 1e-12);
}

TEST_CASE("Monte Carlo exponents on the standard grid") {
  for (double delta : {0.25, 0.5, 1.0}) {
    std::vector<std::pair<double, double>> v, r;
    for (double sigma : {0.2, 0.1, 0.05, 0.02}) {
      v.emplace_back(sigma, tail_volume_mc(CuspCone(delta, kAxis), ShellParams::from_sigma(sigma), 1000000, 11).mean);
      r.emplace_back(sigma, cross_section_radius(sigma, delta).measured);
    }
    const double sv = fit_exponent(v).slope, sr = fit_exponent(r).slope;
    CHECK(sv >= 1.8);
    CHECK(sv <= 2.2);
    CHECK(sr >= 1.8);
    CHECK(sr <= 2.2);
  }
}

TEST_SUITE_END();
