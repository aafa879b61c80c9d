#include "hullvol/planar/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "hullvol/error.hpp"

namespace hullvol::planar {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Similarity::Similarity(double r, double theta, Complex b, bool reflect)
    : Similarity(std::polar(r, theta), b, reflect, 0) {
  if (!(r > 0.0 && r < 1.0) || !std::isfinite(theta))
    throw Error(ErrorKind::ParameterOutOfRange, "similarity ratio must lie in (0, 1)");
}

Similarity::Similarity(Complex rho, Complex b, bool reflect, int) : rho_(rho), b_(b), reflect_(reflect) {
  const double r = std::abs(rho);
  if (!finite(rho) || !finite(b) || !(r > 0.0 && r < 1.0))
    throw Error(ErrorKind::ParameterOutOfRange, "similarity must be finite and strictly contracting");
}

Similarity Similarity::from_multiplier(Complex rho, Complex b, bool reflect) { return Similarity(rho, b, reflect, 0); }

Similarity Similarity::compose(const Similarity& in) const {
  if (!reflect_) return Similarity(rho_ * in.rho_, rho_ * in.b_ + b_, in.reflect_, 0);
  return Similarity(rho_ * std::conj(in.rho_), rho_ * std::conj(in.b_) + b_, !in.reflect_, 0);
}

Similarity Similarity::conjugated(Complex g_rho, Complex g_b) const {
  // g(z) = g_rho z + g_b, g^-1(w) = (w - g_b) / g_rho.
  if (!reflect_) {
    const Complex b = g_rho * (rho_ * (-g_b / g_rho) + b_) + g_b;
    return Similarity(rho_, b, false, 0);
  }
  const Complex rho = g_rho * rho_ / std::conj(g_rho);
  const Complex b = g_rho * (rho_ * std::conj(-g_b / g_rho) + b_) + g_b;
  return Similarity(rho, b, true, 0);
}

Complex Similarity::fixed_point() const noexcept {
  if (!reflect_) return b_ / (1.0 - rho_);
  return (rho_ * std::conj(b_) + b_) / (1.0 - std::norm(rho_));
}

hyper::MobiusMap Similarity::mobius() const {
  if (reflect_) throw Error(ErrorKind::ParameterOutOfRange, "a reflected similarity is not a Moebius map");
  return hyper::MobiusMap::affine(rho_, b_);
}

IFSModel::IFSModel(std::vector<Similarity> maps, std::string label) : maps_(std::move(maps)), label_(std::move(label)) {
  if (maps_.empty()) throw Error(ErrorKind::ParameterOutOfRange, "an IFS needs at least one map");
}

double IFSModel::max_ratio() const noexcept {
  double r = 0.0;
  for (const auto& s : maps_) r = std::max(r, s.ratio());
  return r;
}

IFSModel IFSModel::conjugated(Complex g_rho, Complex g_b) const {
  std::vector<Similarity> out;
  out.reserve(maps_.size());
  for (const auto& s : maps_) out.push_back(s.conjugated(g_rho, g_b));
  return IFSModel(std::move(out), label_);
}

Disc invariant_disc(const IFSModel& ifs, const std::vector<Complex>& extra, double margin) {
  Complex c = 0.0;
  for (const auto& s : ifs.maps()) c += s.fixed_point();
  c /= static_cast<double>(ifs.size());
  // |S_i(c) - c| + r_i R <= R keeps S_i(D) inside D.
  double radius = 0.0;
  for (const auto& s : ifs.maps()) radius = std::max(radius, std::abs(s(c) - c) / (1.0 - s.ratio()));
  for (const Complex& z : extra) radius = std::max(radius, std::abs(z - c));
  return Disc{c, radius * (1.0 + margin)};
}

IFSModel cantor_four_corner(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "beta must lie in (0, 1)");
  const double r = 0.5 * (1.0 - beta);
  const double far = 1.0 - r;
  std::ostringstream label;
  label << "cantor4(beta=" << beta << ")";
  return IFSModel({Similarity(r, 0.0, Complex(0.0, far)), Similarity(r, 0.0, Complex(far, far)),
                   Similarity(r, 0.0, Complex(0.0, 0.0)), Similarity(r, 0.0, Complex(far, 0.0))},
                  label.str());
}

IFSModel parse_ifs(std::istream& in, std::string label) {
  std::vector<Similarity> maps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (keyword != "map") throw Error(ErrorKind::ParseError, where + ": expected 'map'");
    double r = 0, theta = 0, bre = 0, bim = 0;
    if (!(ls >> r >> theta >> bre >> bim)) throw Error(ErrorKind::ParseError, where + ": expected r theta b_re b_im");
    bool reflect = false;
    if (std::string flag; ls >> flag) {
      if (flag != "reflect") throw Error(ErrorKind::ParseError, where + ": unknown flag '" + flag + "'");
      reflect = true;
    }
    if (std::string junk; ls >> junk) throw Error(ErrorKind::ParseError, where + ": trailing text");
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, where + ": r must lie in (0, 1)");
    maps.emplace_back(r, theta, Complex(bre, bim), reflect);
  }
  if (maps.empty()) throw Error(ErrorKind::ParseError, "IFS file defines no maps");
  return IFSModel(std::move(maps), std::move(label));
}

IFSModel load_ifs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open IFS file " + path);
  return parse_ifs(in, path);
}

}  // namespace hullvol::planar
