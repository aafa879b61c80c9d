#include "hullvol/hyperbolic/ext_point.hpp"

#include <cmath>

#include "hullvol/error.hpp"

namespace hullvol::hyper {

ExtPoint::ExtPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorKind::ParameterOutOfRange, "extended point must have finite coordinates");
}

double chordal_distance(const ExtPoint& a, const ExtPoint& b) noexcept {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const Complex p = a.value(), q = b.value();
  return 2.0 * std::abs(p - q) / std::sqrt((1.0 + std::norm(p)) * (1.0 + std::norm(q)));
}

}  // namespace hullvol::hyper
