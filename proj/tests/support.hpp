#ifndef HULLVOL_TESTS_SUPPORT_HPP
#define HULLVOL_TESTS_SUPPORT_HPP

#include <complex>
#include <random>

#include <doctest.h>

#include "hullvol/error.hpp"
#include "hullvol/hyperbolic/mobius.hpp"
#include "hullvol/hyperbolic/models.hpp"

namespace testing {

using Complex = std::complex<double>;

inline hullvol::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const hullvol::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return hullvol::ErrorKind::ParseError;
}

inline Complex random_complex(std::mt19937_64& g, double scale = 2.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(g), n(g)};
}

// Random map with |det| bounded away from zero before normalization.
inline hullvol::hyper::MobiusMap random_mobius(std::mt19937_64& g) {
  for (;;) {
    const Complex a = random_complex(g, 1.0), b = random_complex(g, 1.0), c = random_complex(g, 1.0),
                  d = random_complex(g, 1.0);
    if (std::abs(a * d - b * c) > 0.2) return hullvol::hyper::MobiusMap(a, b, c, d);
  }
}

inline hullvol::hyper::BallPoint random_ball_point(std::mt19937_64& g, double max_radius = 0.95) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  hullvol::hyper::Vec3 v{n(g), n(g), n(g)};
  const double r = max_radius * std::cbrt(u(g));
  return hullvol::hyper::BallPoint((r / norm(v)) * v);
}

inline hullvol::hyper::UHSPoint random_uhs_point(std::mt19937_64& g) {
  std::uniform_real_distribution<double> h(0.2, 3.0);
  return hullvol::hyper::UHSPoint(random_complex(g, 1.0), h(g));
}

}  // namespace testing

#endif  // HULLVOL_TESTS_SUPPORT_HPP
