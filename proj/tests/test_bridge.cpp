#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hullvol/bridge/bridge.hpp"
#include "hullvol/error.hpp"
#include "hullvol/hyperbolic/tetrahedron.hpp"
#include "hullvol/planar/circle.hpp"
#include "hullvol/planar/cloud.hpp"
#include "hullvol/planar/similarity.hpp"
#include "support.hpp"

using namespace hullvol;
using namespace hullvol::bridge;
using planar::Complex;
using testing::kind_of;

namespace {

std::array<Complex, 4> quad_of(const hyper::IdealTetrahedron& t) {
  std::array<Complex, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = t.vertices()[i].value();
  return q;
}

double base_volume(double beta) { return hyper::ideal_tetra_volume(bridge_base_tetra(beta)); }

// Re-derives every family invariant from vertices and discs alone. Vertex tests use the absolute
// 1e-12 slack of the stated invariant. Volumes are recomputed in the generator's fixed-point frame,
// where member k is rho^k (base - anchor) and no precision is lost to the shrinking scale.
void check_family(const TetraFamily& f, std::size_t count, bool strict) {
  REQUIRE(f.members.size() == count);
  REQUIRE(f.discs.size() == count - 1);
  REQUIRE(f.certificates.size() == count - 1);
  REQUIRE(f.volumes.size() == count);
  CHECK(f.total_volume == static_cast<double>(count) * f.base_volume);
  CHECK(f.base_volume == doctest::Approx(hyper::ideal_tetra_volume(f.base)).epsilon(1e-12));
  const Complex rho = f.generator.multiplier();
  Complex scale = 1.0;
  for (std::size_t k = 0; k < count; ++k) {
    CHECK(std::abs(f.volumes[k] - f.base_volume) <= 1e-9);
    auto w = [&](int i) { return hyper::ExtPoint(scale * (f.base.vertices()[i].value() - f.anchor)); };
    CHECK(std::abs(hyper::ideal_tetra_volume(hyper::IdealTetrahedron(w(0), w(1), w(2), w(3))) - f.base_volume) <= 1e-9);
    scale *= rho;
  }
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const Disc& d = f.discs[k];
    CHECK(f.certificates[k].passed());
    for (const auto& v : f.members[k].vertices()) CHECK(std::abs(v.value() - d.center) >= d.radius - 1e-12);
    for (const auto& v : f.members[k + 1].vertices()) {
      if (strict) CHECK(std::abs(v.value() - d.center) < d.radius);
      else CHECK(std::abs(v.value() - d.center) <= d.radius + 1e-12);
    }
    if (k + 2 < count) {
      const Disc& e = f.discs[k + 1];
      CHECK(e.radius / d.radius == doctest::Approx(f.generator.ratio()).epsilon(1e-12));
      if (strict) CHECK(std::abs(e.center - d.center) + e.radius < d.radius);
      else CHECK(std::abs(e.center - d.center) + e.radius <= d.radius + 1e-12);
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("bridge");

TEST_CASE("base tetrahedron") {
  const auto v = quad_of(bridge_base_tetra(0.5));
  CHECK(std::abs(v[0] - Complex(0.25, 0.75)) < 1e-15);
  CHECK(std::abs(v[1] - Complex(0.75, 0.25)) < 1e-15);
  CHECK(v[2] == Complex(0, 0));
  CHECK(v[3] == Complex(1, 1));

  // The inner corners are S1(fix S4) and S4(fix S1).
  for (double beta : {0.2, 0.5, 0.8}) {
    const planar::IFSModel c = planar::cantor_four_corner(beta);
    const auto q = quad_of(bridge_base_tetra(beta));
    CHECK(std::abs(q[0] - c.maps()[0](c.maps()[3].fixed_point())) < 1e-15);
    CHECK(std::abs(q[1] - c.maps()[3](c.maps()[0].fixed_point())) < 1e-15);
    CHECK(std::abs(q[2] - c.maps()[2].fixed_point()) < 1e-15);
    CHECK(std::abs(q[3] - c.maps()[1].fixed_point()) < 1e-15);
  }
  CHECK(kind_of([] { bridge_base_tetra(0.0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { bridge_base_tetra(1.0); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("base tetrahedron volume") {
  // Inner corners moved onto the diagonal y = x make all four vertices collinear.
  const hyper::IdealTetrahedron flat(Complex(0.25, 0.25), Complex(0.75, 0.75), Complex(0, 0), Complex(1, 1));
  CHECK(hyper::ideal_tetra_volume(flat) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

  std::vector<double> vols;
  for (int k = 1; k <= 19; ++k) vols.push_back(base_volume(0.05 * k));
  for (double v : vols) CHECK(v > 0.0);
  // Continuity: neighbouring samples differ by a bounded step.
  for (std::size_t k = 1; k < vols.size(); ++k) CHECK(std::abs(vols[k] - vols[k - 1]) < 0.25);
  // Decreasing toward zero as beta -> 1.
  double prev = base_volume(0.9);
  for (double beta : {0.95, 0.99, 0.999, 0.9999}) {
    const double v = base_volume(beta);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-2);
  CHECK(base_volume(0.5) <= hyper::regular_ideal_volume());
}

TEST_CASE("bridge disc passes through the corners of I1") {
  for (double beta : {0.3, 0.5, 0.7}) {
    const Disc d = bridge_disc(beta);
    const planar::Similarity s1 = planar::cantor_four_corner(beta).maps()[0];
    for (Complex corner : {Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(1, 1)})
      CHECK(std::abs(std::abs(s1(corner) - d.center) - d.radius) < 1e-15);
  }
}

TEST_CASE("bridge family") {
  for (double beta : {0.3, 0.5, 0.7}) {
    const TetraFamily f = bridge_family(beta, 10);
    check_family(f, 10, false);
    CHECK(f.word == std::vector<std::size_t>{0});
    CHECK(std::abs(f.anchor - Complex(0, 1)) < 1e-15);
    CHECK(f.discs[0].radius == doctest::Approx(bridge_disc(beta).radius).epsilon(1e-15));
    CHECK(std::abs(f.discs[0].center - bridge_disc(beta).center) < 1e-15);
    // Member k is S1^k of the base, computed here by direct iteration.
    const planar::Similarity s1 = planar::cantor_four_corner(beta).maps()[0];
    auto q = quad_of(bridge_base_tetra(beta));
    for (std::size_t k = 0; k < 10; ++k) {
      for (int i = 0; i < 4; ++i) CHECK(std::abs(f.members[k].vertices()[i].value() - q[i]) < 1e-14);
      for (auto& z : q) z = s1(z);
    }
    CHECK(f.total_volume == 10.0 * f.base_volume);
    // Each disc touches the next at the anchor, so nesting cannot be strict.
    for (std::size_t k = 0; k + 1 < f.discs.size(); ++k) {
      CHECK(std::abs(std::abs(f.anchor - f.discs[k].center) - f.discs[k].radius) <= 1e-12);
      CHECK(std::abs(std::abs(f.anchor - f.discs[k + 1].center) - f.discs[k + 1].radius) <= 1e-12);
    }
  }
  const TetraFamily one = bridge_family(0.5, 1);
  CHECK(one.members.size() == 1);
  CHECK(one.discs.empty());
  CHECK(kind_of([] { bridge_family(0.5, 0); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("separating disc for the bridge quad") {
  const double beta = 0.5;
  const planar::IFSModel c = planar::cantor_four_corner(beta);
  const auto quad = quad_of(bridge_base_tetra(beta));
  const SeparatingDisc s = find_separating_disc(c, quad, 40);
  CHECK(!s.word.empty());
  CHECK(s.word.size() <= 6);
  REQUIRE(s.trail.size() == s.word.size() + 1);
  for (const Complex& z : quad) CHECK(std::abs(z - s.disc.center) >= s.disc.radius);
  double min_gap = INFINITY;
  for (const Complex& z : quad) min_gap = std::min(min_gap, std::abs(z - s.limit_point));
  CHECK(2.0 * s.disc.radius < min_gap);
  CHECK(s.disc.contains(s.limit_point));

  // Shrinkage is exact in the map ratios.
  for (std::size_t m = 0; m < s.word.size(); ++m)
    CHECK(s.trail[m + 1].radius == doctest::Approx(c.maps()[s.word[m]].ratio() * s.trail[m].radius).epsilon(1e-15));
  // The composition is S_{i_1} o ... o S_{i_M}.
  planar::Similarity w = c.maps()[s.word[0]];
  for (std::size_t m = 1; m < s.word.size(); ++m) w = w.compose(c.maps()[s.word[m]]);
  CHECK(std::abs(w.multiplier() - s.composition.multiplier()) < 1e-15);
  CHECK(std::abs(w.translation() - s.composition.translation()) < 1e-15);
  CHECK(std::abs(w(s.trail[0].center) - s.disc.center) < 1e-14);

  // The disc sits in the first-level disc of one corner and captures attractor points of that corner only.
  const planar::Similarity corner = c.maps()[s.word[0]];
  const Disc level1{corner(s.trail[0].center), corner.ratio() * s.trail[0].radius};
  CHECK(std::abs(s.disc.center - level1.center) + s.disc.radius <= level1.radius);
  const Complex lo = corner(Complex(0, 0)), hi = corner(Complex(1, 1));
  int captured = 0;
  const planar::PointCloud sample = planar::attractor_sample(c, 7);
  for (const Complex& z : sample.points()) {
    if (!s.disc.contains(z)) continue;
    ++captured;
    CHECK(z.real() >= std::min(lo.real(), hi.real()) - 1e-15);
    CHECK(z.real() <= std::max(lo.real(), hi.real()) + 1e-15);
    CHECK(z.imag() >= std::min(lo.imag(), hi.imag()) - 1e-15);
    CHECK(z.imag() <= std::max(lo.imag(), hi.imag()) + 1e-15);
  }
  CHECK(captured > 0);
}

TEST_CASE("separating disc: trail shrinks and stays nested") {
  std::mt19937_64 g(61);
  const Complex h(0.25, std::sqrt(3.0) / 4.0);
  const planar::IFSModel sierpinski(
      {planar::Similarity(0.5, 0.0, Complex(0, 0)), planar::Similarity(0.5, 0.0, Complex(0.5, 0)),
       planar::Similarity(0.5, 0.0, h)});
  const planar::PointCloud sample = planar::attractor_sample(sierpinski, 6);
  const auto v = planar::circle_test(sample.points());
  REQUIRE(v.witness.has_value());
  const SeparatingDisc s = find_separating_disc(sierpinski, v.witness->points, 40);
  for (std::size_t m = 1; m < s.trail.size(); ++m) {
    CHECK(s.trail[m].radius < s.trail[m - 1].radius);
    CHECK(std::abs(s.trail[m].center - s.trail[m - 1].center) + s.trail[m].radius <=
          s.trail[m - 1].radius * (1.0 + 1e-12));
  }
}

TEST_CASE("separating disc: quad far from the attractor") {
  const planar::IFSModel c = planar::cantor_four_corner(0.5);
  const std::array<Complex, 4> far = {Complex(10, 0), Complex(0, 10), Complex(-10, 0), Complex(10, 10)};
  const SeparatingDisc s = find_separating_disc(c, far, 40);
  CHECK(s.word.size() == 1);
}

TEST_CASE("separating disc errors") {
  const planar::IFSModel c = planar::cantor_four_corner(0.5);
  const std::array<Complex, 4> concyclic = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  CHECK(kind_of([&] { find_separating_disc(c, concyclic, 40); }) == ErrorKind::NoValidQuad);
  const std::array<Complex, 4> collinear = {Complex(0, 0), Complex(1, 1), Complex(2, 2), Complex(0.5, 0.5)};
  CHECK(kind_of([&] { find_separating_disc(c, collinear, 40); }) == ErrorKind::NoValidQuad);
  const auto quad = quad_of(bridge_base_tetra(0.5));
  CHECK(kind_of([&] { find_separating_disc(c, quad, 1); }) == ErrorKind::DepthCapExceeded);
  CHECK(kind_of([&] { find_separating_disc(c, quad, 0); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("general family") {
  const planar::IFSModel c = planar::cantor_four_corner(0.5);
  const auto quad = quad_of(bridge_base_tetra(0.5));
  const TetraFamily f = general_family(c, quad, 8, 40);
  check_family(f, 8, true);
  CHECK(f.base_volume == doctest::Approx(base_volume(0.5)).epsilon(1e-12));

  const TetraFamily one = general_family(c, quad, 1, 40);
  CHECK(one.members.size() == 1);
  CHECK(one.discs.empty());

  // Countable orbit of a single similarity, with an external quad.
  const planar::IFSModel orbit({planar::Similarity(0.5, 0.3, Complex(0.1, 0.2))});
  const std::array<Complex, 4> ext = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(1, 1)};
  const TetraFamily o = general_family(orbit, ext, 10, 40);
  check_family(o, 10, true);
  CHECK(o.base_volume > 0.0);

  // A reflecting map is squared into a Moebius generator.
  const planar::IFSModel mirrored({planar::Similarity(0.5, 0.4, Complex(0.2, -0.1), true)});
  const TetraFamily r = general_family(mirrored, ext, 6, 40);
  CHECK_FALSE(r.generator.reflects());
  CHECK(r.word.size() % 2 == 0);
  check_family(r, 6, true);
}

TEST_CASE("general family on random similarity systems") {
  std::mt19937_64 g(67);
  std::uniform_real_distribution<double> ratio(0.15, 0.45), angle(-3.1, 3.1);
  int built = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<planar::Similarity> maps;
    const int n = 2 + trial % 3;
    for (int i = 0; i < n; ++i) maps.emplace_back(ratio(g), angle(g), testing::random_complex(g, 1.0));
    const planar::IFSModel ifs(maps);
    const planar::PointCloud sample = planar::attractor_sample(ifs, 5);
    const auto v = planar::circle_test(sample.points());
    if (!v.witness) continue;
    const TetraFamily f = general_family(ifs, v.witness->points, 5, 60);
    check_family(f, 5, true);
    ++built;
  }
  CHECK(built >= 25);
}

TEST_SUITE_END();
