#ifndef HULLVOL_HYPERBOLIC_RECENTER_HPP
#define HULLVOL_HYPERBOLIC_RECENTER_HPP

#include <array>
#include <cstddef>
#include <span>

#include "hullvol/hyperbolic/ext_point.hpp"
#include "hullvol/hyperbolic/mobius.hpp"
#include "hullvol/hyperbolic/models.hpp"

namespace hullvol::hyper {

struct Recentering {
  MobiusMap map;                     ///< sends interior_point to the ball origin, i.e. (0, 1) in UHS
  UHSPoint interior_point;           ///< in the coordinates of the input points
  std::array<std::size_t, 4> quad;   ///< indices of the non-concyclic quadruple used
};

/// Symmetric center of the ideal tetrahedron (a, b, c, d): the midpoint of the common
/// perpendicular of edges [a, b] and [c, d]. Fixed by every isometry permuting the vertices
/// through a double transposition, hence Moebius-equivariant.
/// Throws DegenerateQuadruple for repeated or concyclic vertices.
UHSPoint tetra_center(const ExtPoint& a, const ExtPoint& b, const ExtPoint& c, const ExtPoint& d);

/// True when the UHS point lies strictly inside the ideal tetrahedron (Klein-model barycentric test).
bool tetra_contains(const std::array<ExtPoint, 4>& vertices, const UHSPoint& p);

/// Pick the first three distinct points and the first later point off their circle, and
/// return the similarity moving that quadruple's center to the origin of the ball.
/// Throws ConcyclicInput when every point lies on one circle.
Recentering recenter_hull(std::span<const ExtPoint> points);

}  // namespace hullvol::hyper

#endif  // HULLVOL_HYPERBOLIC_RECENTER_HPP
