#include "hullvol/hyperbolic/mobius.hpp"

#include <cmath>

#include "hullvol/error.hpp"

namespace hullvol::hyper {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d))
    throw Error(ErrorKind::ParameterOutOfRange, "Moebius coefficients must be finite");
  const Complex det = a * d - b * c;
  if (det == Complex(0.0, 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "Moebius determinant is zero");
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

MobiusMap MobiusMap::identity() noexcept { return MobiusMap(1.0, 0.0, 0.0, 1.0); }

MobiusMap MobiusMap::affine(Complex rho, Complex b) { return MobiusMap(rho, b, 0.0, 1.0); }

MobiusMap MobiusMap::normalizing(const ExtPoint& p, const ExtPoint& q, const ExtPoint& r) {
  if (p == q || q == r || p == r) throw Error(ErrorKind::DegenerateQuadruple, "normalizing triple has repeated points");
  if (p.is_infinite()) return MobiusMap(0.0, q.value() - r.value(), 1.0, -r.value());
  if (q.is_infinite()) return MobiusMap(1.0, -p.value(), 1.0, -r.value());
  if (r.is_infinite()) return MobiusMap(1.0, -p.value(), 0.0, q.value() - p.value());
  const Complex qr = q.value() - r.value();
  const Complex qp = q.value() - p.value();
  return MobiusMap(qr, -p.value() * qr, qp, -r.value() * qp);
}

ExtPoint MobiusMap::operator()(const ExtPoint& z) const noexcept {
  if (z.is_infinite()) {
    if (c_ == Complex(0.0, 0.0)) return ExtPoint::infinity();
    return ExtPoint(a_ / c_);
  }
  const Complex den = c_ * z.value() + d_;
  if (den == Complex(0.0, 0.0)) return ExtPoint::infinity();
  const Complex w = (a_ * z.value() + b_) / den;
  if (!finite(w)) return ExtPoint::infinity();
  return ExtPoint(w);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::power(int n) const {
  MobiusMap base = n < 0 ? inverse() : *this;
  MobiusMap acc = identity();
  for (int k = std::abs(n); k > 0; k >>= 1) {
    if (k & 1) acc = acc.compose(base);
    base = base.compose(base);
  }
  return acc;
}

bool MobiusMap::approx_equal(const MobiusMap& o, double tol) const noexcept {
  // Unit-determinant representatives are unique up to sign.
  auto close = [&](double sign) {
    return std::abs(a_ - sign * o.a_) <= tol && std::abs(b_ - sign * o.b_) <= tol &&
           std::abs(c_ - sign * o.c_) <= tol && std::abs(d_ - sign * o.d_) <= tol;
  };
  return close(1.0) || close(-1.0);
}

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& z) noexcept { return m(z); }

Complex cross_ratio(const ExtPoint& a, const ExtPoint& b, const ExtPoint& c, const ExtPoint& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw Error(ErrorKind::DegenerateQuadruple, "cross ratio needs four distinct points");
  if (a.is_infinite()) return (b.value() - d.value()) / (c.value() - d.value());
  if (b.is_infinite()) return (c.value() - a.value()) / (c.value() - d.value());
  if (c.is_infinite()) return (b.value() - d.value()) / (b.value() - a.value());
  if (d.is_infinite()) return (c.value() - a.value()) / (b.value() - a.value());
  return ((c.value() - a.value()) * (b.value() - d.value())) / ((c.value() - d.value()) * (b.value() - a.value()));
}

bool is_concyclic_ratio(Complex z) noexcept { return std::abs(z.imag()) <= 1e-10 * (1.0 + std::abs(z)); }

}  // namespace hullvol::hyper
