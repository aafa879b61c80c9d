#ifndef HULLVOL_HYPERBOLIC_EXT_POINT_HPP
#define HULLVOL_HYPERBOLIC_EXT_POINT_HPP

#include <complex>

namespace hullvol::hyper {

using Complex = std::complex<double>;

/// A point of the extended complex plane: a finite complex number or the single point at infinity.
class ExtPoint {
 public:
  /// Finite point. Throws ParameterOutOfRange on NaN or infinite coordinates.
  ExtPoint(Complex z);  // NOLINT(google-explicit-constructor)
  ExtPoint(double re, double im = 0.0) : ExtPoint(Complex(re, im)) {}

  static ExtPoint infinity() noexcept { return ExtPoint(); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Precondition: is_finite().
  Complex value() const noexcept { return z_; }

  friend bool operator==(const ExtPoint& a, const ExtPoint& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  ExtPoint() noexcept : z_(0.0, 0.0), infinite_(true) {}

  Complex z_;
  bool infinite_ = false;
};

/// Chordal distance on the Riemann sphere (diameter-2 sphere); 2 between 0 and infinity.
double chordal_distance(const ExtPoint& a, const ExtPoint& b) noexcept;

}  // namespace hullvol::hyper

#endif  // HULLVOL_HYPERBOLIC_EXT_POINT_HPP
