#ifndef HULLVOL_HYPERBOLIC_MOBIUS_HPP
#define HULLVOL_HYPERBOLIC_MOBIUS_HPP

#include <array>
#include <span>

#include "hullvol/hyperbolic/ext_point.hpp"

namespace hullvol::hyper {

/// z -> (a z + b) / (c z + d), stored with unit determinant.
class MobiusMap {
 public:
  /// Throws ParameterOutOfRange when ad - bc == 0 or a coefficient is not finite.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() noexcept;
  /// z -> rho z + b (a direct similarity when |rho| < 1).
  static MobiusMap affine(Complex rho, Complex b);
  /// The map sending p -> 0, q -> 1, r -> infinity. Throws DegenerateQuadruple on repeated points.
  static MobiusMap normalizing(const ExtPoint& p, const ExtPoint& q, const ExtPoint& r);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }

  ExtPoint operator()(const ExtPoint& z) const noexcept;

  /// (*this)(other(z)).
  MobiusMap compose(const MobiusMap& other) const;
  MobiusMap inverse() const;
  MobiusMap power(int n) const;

  /// True when both maps agree as projective matrices within tol.
  bool approx_equal(const MobiusMap& other, double tol) const noexcept;

 private:
  Complex a_, b_, c_, d_;
};

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& z) noexcept;

/// Cross ratio C(a,b,c,d) = M(c) for the Moebius map with M(a)=0, M(b)=1, M(d)=inf.
/// Throws DegenerateQuadruple if two inputs coincide.
Complex cross_ratio(const ExtPoint& a, const ExtPoint& b, const ExtPoint& c, const ExtPoint& d);

/// |Im z| <= 1e-10 (1 + |z|): the floating-point stand-in for "the four points are concyclic".
bool is_concyclic_ratio(Complex z) noexcept;

}  // namespace hullvol::hyper

#endif  // HULLVOL_HYPERBOLIC_MOBIUS_HPP
