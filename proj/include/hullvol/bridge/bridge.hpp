#ifndef HULLVOL_BRIDGE_BRIDGE_HPP
#define HULLVOL_BRIDGE_BRIDGE_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "hullvol/hyperbolic/mobius.hpp"
#include "hullvol/hyperbolic/tetrahedron.hpp"
#include "hullvol/planar/similarity.hpp"

namespace hullvol::bridge {

using planar::Complex;
using planar::Disc;

/// Relative tolerance for the in/out disc tests (scaled by the disc radius).
inline constexpr double kCertificateTol = 1e-12;

/// Separation checks between member k, member k + 1 and disc k.
struct Certificate {
  std::size_t k = 0;
  bool member_outside = false;  ///< member k avoids the open disc k
  bool next_inside = false;     ///< member k + 1 lies in the closed disc k
  bool next_strict = false;     ///< ... and in the open disc k
  bool nested = false;          ///< disc k + 1 lies in disc k
  double outside_margin = 0.0;  ///< min over member k of (|v - c| - R) / R
  double inside_margin = 0.0;   ///< min over member k + 1 of (R - |v - c|) / R
  bool passed() const noexcept { return member_outside && next_inside && nested; }
};

/// Images T, S(T), S^2(T), ... of an ideal tetrahedron under a contracting direct similarity S,
/// separated by the nested discs A, S(A), ...
struct TetraFamily {
  hyper::IdealTetrahedron base;
  planar::Similarity generator;
  hyper::MobiusMap generator_mobius;
  std::vector<std::size_t> word;  ///< 0-based map indices composing the generator, outermost first
  Complex anchor;                 ///< fixed point of the generator
  std::vector<hyper::IdealTetrahedron> members;
  std::vector<Disc> discs;        ///< one fewer than members
  std::vector<double> volumes;
  std::vector<Certificate> certificates;
  double base_volume = 0.0;
  double total_volume = 0.0;      ///< count * base_volume
};

/// Ideal tetrahedron on the two inner corners r + (1-r)i, (1-r) + ri and the outer corners 0, 1 + i
/// of the four-corner Cantor set, r = (1 - beta)/2. Throws ParameterOutOfRange outside (0, 1).
hyper::IdealTetrahedron bridge_base_tetra(double beta);

/// Disc through the four corners of the top-left square I1 = S1([0,1]^2).
Disc bridge_disc(double beta);

/// count members of the bridge family under S1 (top-left corner map). The circumscribed disc of
/// I1 passes through two vertices of member 1 and one of the base, so inclusion is certified on
/// closed discs. Throws ParameterOutOfRange for count < 1, CertificateFailure on a failed check.
TetraFamily bridge_family(double beta, std::size_t count);

struct SeparatingDisc {
  std::vector<std::size_t> word;  ///< i_1, ..., i_M (0-based); the composition is S_{i_1} o ... o S_{i_M}
  planar::Similarity composition;
  Disc disc;                      ///< D_M = composition(D)
  Complex limit_point;            ///< fixed point of the composition
  std::vector<Disc> trail;        ///< D_0 = D, D_1, ..., D_M
};

/// Starting disc D contains the attractor and the quad (inflated 1%). Descends into the branch whose
/// image disc has the largest clearance from the quad (ties to the lowest index) until the quad lies
/// outside the open disc D_M and diam(D_M) < min distance from the limit point to the quad.
/// Throws NoValidQuad when the quad is concyclic, DepthCapExceeded past depth_cap.
SeparatingDisc find_separating_disc(const planar::IFSModel& ifs, const std::array<Complex, 4>& quad, int depth_cap);

/// Family generated by the separating word. When the word's composition reflects, its square is
/// used so that the generator is Moebius. Inclusions are certified strictly.
TetraFamily general_family(const planar::IFSModel& ifs, const std::array<Complex, 4>& quad, std::size_t count,
                           int depth_cap);

}  // namespace hullvol::bridge

#endif  // HULLVOL_BRIDGE_BRIDGE_HPP
