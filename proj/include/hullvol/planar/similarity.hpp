#ifndef HULLVOL_PLANAR_SIMILARITY_HPP
#define HULLVOL_PLANAR_SIMILARITY_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "hullvol/hyperbolic/mobius.hpp"

namespace hullvol::planar {

using Complex = std::complex<double>;

/// Contracting similarity z -> r e^{i theta} z + b, or z -> r e^{i theta} conj(z) + b when reflected.
class Similarity {
 public:
  /// Throws ParameterOutOfRange unless 0 < r < 1 and every field is finite.
  Similarity(double r, double theta, Complex b, bool reflect = false);

  /// From the complex multiplier rho = r e^{i theta}.
  static Similarity from_multiplier(Complex rho, Complex b, bool reflect = false);

  double ratio() const noexcept { return std::abs(rho_); }
  double angle() const noexcept { return std::arg(rho_); }
  Complex multiplier() const noexcept { return rho_; }
  Complex translation() const noexcept { return b_; }
  bool reflects() const noexcept { return reflect_; }

  Complex operator()(Complex z) const noexcept { return rho_ * (reflect_ ? std::conj(z) : z) + b_; }

  /// (*this)(inner(z)).
  Similarity compose(const Similarity& inner) const;
  /// Conjugate by an invertible direct similarity g: g o S o g^-1.
  Similarity conjugated(Complex g_rho, Complex g_b) const;
  Complex fixed_point() const noexcept;

  /// Moebius form; only direct similarities are Moebius (ParameterOutOfRange otherwise).
  hyper::MobiusMap mobius() const;

 private:
  Similarity(Complex rho, Complex b, bool reflect, int);

  Complex rho_;
  Complex b_;
  bool reflect_;
};

struct Disc {
  Complex center;
  double radius = 0.0;

  bool contains(Complex z, double tol = 0.0) const noexcept { return std::abs(z - center) <= radius + tol; }
};

/// Finite family of contracting similarities; its attractor is the self-similar set.
class IFSModel {
 public:
  /// Throws ParameterOutOfRange on an empty list.
  IFSModel(std::vector<Similarity> maps, std::string label = {});

  const std::vector<Similarity>& maps() const noexcept { return maps_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const std::string& label() const noexcept { return label_; }
  double max_ratio() const noexcept;

  /// Conjugate every map by the direct similarity g(z) = g_rho z + g_b; the attractor moves to g(K).
  IFSModel conjugated(Complex g_rho, Complex g_b) const;

 private:
  std::vector<Similarity> maps_;
  std::string label_;
};

/// A disc D with S_i(D) inside D for every map (hence containing the attractor) and containing
/// `extra` points, inflated by the relative `margin`. Centered at the mean of the fixed points.
Disc invariant_disc(const IFSModel& ifs, const std::vector<Complex>& extra = {}, double margin = 0.0);

/// Four-corner Cantor set C_beta: ratio (1 - beta)/2, squares ordered left-to-right, top-to-bottom
/// (I1 top-left, I2 top-right, I3 bottom-left, I4 bottom-right).
IFSModel cantor_four_corner(double beta);

/// Line-oriented text: `map r theta b_re b_im [reflect]`, `#` comments, blank lines ignored.
IFSModel parse_ifs(std::istream& in, std::string label = {});
IFSModel load_ifs(const std::string& path);

}  // namespace hullvol::planar

#endif  // HULLVOL_PLANAR_SIMILARITY_HPP
