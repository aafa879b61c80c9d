#include "hullvol/bridge/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hullvol/error.hpp"

namespace hullvol::bridge {

namespace {

using hyper::ExtPoint;
using hyper::IdealTetrahedron;

IdealTetrahedron tetra(const std::array<Complex, 4>& v) {
  return IdealTetrahedron(ExtPoint(v[0]), ExtPoint(v[1]), ExtPoint(v[2]), ExtPoint(v[3]));
}

std::string describe(const Certificate& c) {
  std::ostringstream os;
  os << "certificate " << c.k << " failed:";
  if (!c.member_outside) os << " member " << c.k << " enters the open disc (margin " << c.outside_margin << ")";
  if (!c.next_inside) os << " member " << c.k + 1 << " leaves the disc (margin " << c.inside_margin << ")";
  if (!c.nested) os << " disc " << c.k + 1 << " is not inside disc " << c.k;
  return os.str();
}

// All geometry is carried as offsets from the generator's fixed point p: member k has vertices
// p + rho^k (v - p) and disc k has center p + rho^k (c - p). Offsets shrink geometrically while
// keeping full relative precision, so deep members' volumes and certificates stay accurate.
TetraFamily build_family(const std::array<Complex, 4>& base, const planar::Similarity& gen,
                         std::vector<std::size_t> word, const Disc& first_disc, std::size_t count, bool strict) {
  if (count < 1) throw Error(ErrorKind::ParameterOutOfRange, "family needs at least one member");
  if (gen.reflects()) throw Error(ErrorKind::ParameterOutOfRange, "family generator must be orientation preserving");

  const Complex p = gen.fixed_point();
  const Complex rho = gen.multiplier();
  const double r = gen.ratio();

  std::vector<std::array<Complex, 4>> offsets(count);
  for (int i = 0; i < 4; ++i) offsets[0][i] = base[i] - p;
  for (std::size_t k = 1; k < count; ++k)
    for (int i = 0; i < 4; ++i) offsets[k][i] = rho * offsets[k - 1][i];

  std::vector<Complex> disc_offset;
  std::vector<double> radius;
  if (count > 1) {
    disc_offset.push_back(first_disc.center - p);
    radius.push_back(first_disc.radius);
    for (std::size_t k = 1; k + 1 < count; ++k) {
      disc_offset.push_back(rho * disc_offset.back());
      radius.push_back(radius.back() * r);
    }
  }

  TetraFamily fam{tetra(base), gen, gen.mobius(), std::move(word), p, {}, {}, {}, {}, 0.0, 0.0};
  for (std::size_t k = 0; k < count; ++k) {
    std::array<Complex, 4> abs_v;
    for (int i = 0; i < 4; ++i) abs_v[i] = p + offsets[k][i];
    fam.members.push_back(tetra(abs_v));
    fam.volumes.push_back(hyper::ideal_tetra_volume(tetra(offsets[k])));
  }
  fam.base_volume = fam.volumes.front();
  fam.total_volume = static_cast<double>(count) * fam.base_volume;

  for (std::size_t k = 0; k + 1 < count; ++k) {
    const Complex c = disc_offset[k];
    const double R = radius[k];
    fam.discs.push_back(Disc{p + c, R});
    Certificate cert;
    cert.k = k;
    cert.outside_margin = std::numeric_limits<double>::infinity();
    cert.inside_margin = std::numeric_limits<double>::infinity();
    for (const Complex& v : offsets[k]) cert.outside_margin = std::min(cert.outside_margin, (std::abs(v - c) - R) / R);
    for (const Complex& v : offsets[k + 1]) cert.inside_margin = std::min(cert.inside_margin, (R - std::abs(v - c)) / R);
    cert.member_outside = cert.outside_margin >= -kCertificateTol;
    cert.next_inside = cert.inside_margin >= -kCertificateTol;
    cert.next_strict = cert.inside_margin > kCertificateTol;
    // disc k + 1 = S(disc k); its center offset is rho c and radius r R.
    cert.nested = std::abs(rho * c - c) + r * R <= R * (1.0 + kCertificateTol);
    fam.certificates.push_back(cert);
    if (!cert.passed()) throw Error(ErrorKind::CertificateFailure, describe(cert));
    if (strict && !cert.next_strict)
      throw Error(ErrorKind::CertificateFailure,
                  "certificate " + std::to_string(k) + " failed: member " + std::to_string(k + 1) +
                      " touches the boundary of disc " + std::to_string(k));
  }
  return fam;
}

double clearance(const Disc& d, const std::array<Complex, 4>& quad) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& q : quad) m = std::min(m, std::abs(q - d.center));
  return m - d.radius;
}

}  // namespace

IdealTetrahedron bridge_base_tetra(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "beta must lie in (0, 1)");
  const double r = (1.0 - beta) / 2.0;
  return tetra({Complex(r, 1.0 - r), Complex(1.0 - r, r), Complex(0.0, 0.0), Complex(1.0, 1.0)});
}

Disc bridge_disc(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "beta must lie in (0, 1)");
  const double r = (1.0 - beta) / 2.0;
  return Disc{Complex(r / 2.0, 1.0 - r / 2.0), r / std::sqrt(2.0)};
}

TetraFamily bridge_family(double beta, std::size_t count) {
  const IdealTetrahedron base = bridge_base_tetra(beta);
  const planar::IFSModel ifs = planar::cantor_four_corner(beta);
  std::array<Complex, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = base.vertices()[i].value();
  return build_family(v, ifs.maps()[0], {0}, bridge_disc(beta), count, false);
}

SeparatingDisc find_separating_disc(const planar::IFSModel& ifs, const std::array<Complex, 4>& quad, int depth_cap) {
  if (depth_cap < 1) throw Error(ErrorKind::ParameterOutOfRange, "depth cap must be positive");
  const Complex cr =
      hyper::cross_ratio(ExtPoint(quad[0]), ExtPoint(quad[1]), ExtPoint(quad[2]), ExtPoint(quad[3]));
  if (hyper::is_concyclic_ratio(cr))
    throw Error(ErrorKind::NoValidQuad, "the quadruple is concyclic (real cross ratio)");

  const Disc d0 = planar::invariant_disc(ifs, {quad.begin(), quad.end()}, 0.01);
  const double tie = 1e-12 * d0.radius;

  planar::Similarity w = ifs.maps()[0];  // placeholder until the first branch is chosen
  bool identity = true;
  SeparatingDisc out{{}, w, d0, 0.0, {d0}};
  for (int m = 1; m <= depth_cap; ++m) {
    std::size_t best = 0;
    double best_clear = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ifs.size(); ++i) {
      const planar::Similarity cand = identity ? ifs.maps()[i] : w.compose(ifs.maps()[i]);
      const Disc d{cand(d0.center), cand.ratio() * d0.radius};
      const double c = clearance(d, quad);
      if (c > best_clear + tie) {
        best_clear = c;
        best = i;
      }
    }
    w = identity ? ifs.maps()[best] : w.compose(ifs.maps()[best]);
    identity = false;
    const Disc dm{w(d0.center), w.ratio() * d0.radius};
    out.word.push_back(best);
    out.trail.push_back(dm);
    if (best_clear < -tie) continue;
    const Complex p = w.fixed_point();
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& q : quad) nearest = std::min(nearest, std::abs(p - q));
    if (2.0 * dm.radius < nearest) {
      out.composition = w;
      out.disc = dm;
      out.limit_point = p;
      return out;
    }
  }
  throw Error(ErrorKind::DepthCapExceeded,
              "no separating disc within " + std::to_string(depth_cap) + " levels; raise the depth cap");
}

TetraFamily general_family(const planar::IFSModel& ifs, const std::array<Complex, 4>& quad, std::size_t count,
                           int depth_cap) {
  SeparatingDisc sep = find_separating_disc(ifs, quad, depth_cap);
  planar::Similarity gen = sep.composition;
  std::vector<std::size_t> word = sep.word;
  Disc first = sep.disc;
  if (gen.reflects()) {
    // The square of a reflecting similarity is direct; W^2(D) lies in W(D) and keeps the same limit point.
    gen = gen.compose(gen);
    word.insert(word.end(), sep.word.begin(), sep.word.end());
    const Disc d0 = sep.trail.front();
    first = Disc{gen(d0.center), gen.ratio() * d0.radius};
  }
  return build_family(quad, gen, std::move(word), first, count, true);
}

}  // namespace hullvol::bridge
