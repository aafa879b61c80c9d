#ifndef HULLVOL_HYPERBOLIC_TETRAHEDRON_HPP
#define HULLVOL_HYPERBOLIC_TETRAHEDRON_HPP

#include <array>

#include "hullvol/hyperbolic/ext_point.hpp"
#include "hullvol/hyperbolic/mobius.hpp"

namespace hullvol::hyper {

/// Lobachevsky function -int_0^theta log|2 sin t| dt. Odd and pi-periodic.
double lobachevsky(double theta);

/// Volume of the regular ideal tetrahedron, 3 Lambda(pi/3): the largest ideal volume.
double regular_ideal_volume();

/// Four pairwise distinct ideal vertices on the sphere at infinity.
class IdealTetrahedron {
 public:
  /// Throws DegenerateQuadruple if two vertices coincide.
  IdealTetrahedron(ExtPoint v1, ExtPoint v2, ExtPoint v3, ExtPoint v4);

  const std::array<ExtPoint, 4>& vertices() const noexcept { return v_; }
  Complex shape() const;  ///< cross ratio of (v1, v2, v3, v4)
  IdealTetrahedron mapped(const MobiusMap& m) const;

 private:
  std::array<ExtPoint, 4> v_;
};

struct DihedralAngles {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

/// Dihedral angles at one vertex of the ideal tetrahedron with shape z (conjugated if Im z < 0).
/// All zero when z is real.
DihedralAngles dihedral_angles(Complex z);

double ideal_tetra_volume(const IdealTetrahedron& t);

}  // namespace hullvol::hyper

#endif  // HULLVOL_HYPERBOLIC_TETRAHEDRON_HPP
