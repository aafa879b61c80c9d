#include "hullvol/hyperbolic/tetrahedron.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "hullvol/error.hpp"

namespace hullvol::hyper {

namespace {

// Smooth remainder log(sin s / s) on [0, pi/2]; the log(2s) part is integrated in closed form.
double log_sinc(double s) {
  if (s < 1e-4) {
    const double s2 = s * s;
    return -s2 / 6.0 - s2 * s2 / 180.0;
  }
  return std::log(std::sin(s) / s);
}

}  // namespace

double lobachevsky(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = theta - pi * std::round(theta / pi);  // t in [-pi/2, pi/2]
  double sign = 1.0;
  if (t < 0.0) {
    t = -t;
    sign = -1.0;
  }
  if (t == 0.0) return 0.0;
  // The integrand is analytic out to s = pi, so a fixed Gauss rule is exact to rounding.
  const double smooth = boost::math::quadrature::gauss<double, 20>::integrate(log_sinc, 0.0, t);
  return sign * (-(t * std::log(2.0 * t) - t) - smooth);
}

double regular_ideal_volume() {
  static const double v = 3.0 * lobachevsky(std::numbers::pi / 3.0);
  return v;
}

IdealTetrahedron::IdealTetrahedron(ExtPoint v1, ExtPoint v2, ExtPoint v3, ExtPoint v4) : v_{v1, v2, v3, v4} {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v_[i] == v_[j]) throw Error(ErrorKind::DegenerateQuadruple, "ideal tetrahedron vertices must be distinct");
}

Complex IdealTetrahedron::shape() const { return cross_ratio(v_[0], v_[1], v_[2], v_[3]); }

IdealTetrahedron IdealTetrahedron::mapped(const MobiusMap& m) const {
  return IdealTetrahedron(m(v_[0]), m(v_[1]), m(v_[2]), m(v_[3]));
}

DihedralAngles dihedral_angles(Complex z) {
  if (is_concyclic_ratio(z)) return {};
  if (z.imag() < 0.0) z = std::conj(z);
  // The three shape parameters z, 1/(1-z), 1-1/z all have positive imaginary part; args sum to pi.
  const double alpha = std::arg(z);
  const double beta = std::arg(1.0 / (1.0 - z));
  const double gamma = std::numbers::pi - alpha - beta;
  return {alpha, beta, gamma};
}

double ideal_tetra_volume(const IdealTetrahedron& t) {
  const Complex z = t.shape();
  if (is_concyclic_ratio(z)) return 0.0;
  const DihedralAngles a = dihedral_angles(z);
  return lobachevsky(a.alpha) + lobachevsky(a.beta) + lobachevsky(a.gamma);
}

}  // namespace hullvol::hyper
