#include "hullvol/planar/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "hullvol/error.hpp"
#include "hullvol/simd/kernels.hpp"

namespace hullvol::planar {

PointCloud::PointCloud(std::vector<Complex> points, double resolution)
    : points_(std::move(points)), resolution_(resolution) {
  if (points_.empty()) throw Error(ErrorKind::EmptyCloud, "point cloud is empty");
  if (!(resolution_ > 0.0) || !std::isfinite(resolution_))
    throw Error(ErrorKind::ParameterOutOfRange, "cloud resolution must be positive");
}

double PointCloud::diameter() const noexcept {
  // Farthest pair is a pair of convex hull vertices (monotone chain hull, then all hull pairs).
  std::vector<Complex> pts = points_;
  auto less = [](Complex a, Complex b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts.size() == 2 ? std::abs(pts[0] - pts[1]) : 0.0;
  auto turn = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, std::abs(hull[i] - hull[j]));
  return best;
}

namespace {

double sample_resolution(const IFSModel& ifs, int depth) {
  const double diam = 2.0 * invariant_disc(ifs).radius;
  const double res = std::pow(ifs.max_ratio(), depth) * diam;
  return std::max(res, std::numeric_limits<double>::min());
}

bool within_budget(std::size_t n, int depth, std::uint64_t budget) {
  long double cost = depth;
  cost *= std::pow(static_cast<long double>(n), depth);
  return std::max<long double>(cost, std::pow(static_cast<long double>(n), depth)) <= static_cast<long double>(budget);
}

}  // namespace

PointCloud attractor_sample(const IFSModel& ifs, int depth, std::uint64_t budget) {
  if (depth < 0) throw Error(ErrorKind::ParameterOutOfRange, "depth must be non-negative");
  if (!within_budget(ifs.size(), depth, budget))
    throw Error(ErrorKind::BudgetExceeded, "depth * N^depth exceeds the sample budget (depth " + std::to_string(depth) +
                                               ", N = " + std::to_string(ifs.size()) + ")");
  const Complex seed = ifs.maps().front().fixed_point();
  std::vector<double> re{seed.real()}, im{seed.imag()};
  for (int level = 0; level < depth; ++level) {
    const std::size_t n = re.size();
    std::vector<double> next_re(n * ifs.size()), next_im(n * ifs.size());
    // Prepending map i to every word of the previous level keeps the lexicographic order.
    for (std::size_t i = 0; i < ifs.size(); ++i) {
      const Similarity& s = ifs.maps()[i];
      simd::affine_map(re, im, s.multiplier(), s.translation(), s.reflects(),
                       std::span<double>(next_re).subspan(i * n, n), std::span<double>(next_im).subspan(i * n, n));
    }
    re.swap(next_re);
    im.swap(next_im);
  }
  std::vector<Complex> pts(re.size());
  for (std::size_t k = 0; k < pts.size(); ++k) pts[k] = Complex(re[k], im[k]);
  return PointCloud(std::move(pts), sample_resolution(ifs, depth));
}

int depth_for_radius(const IFSModel& ifs, double min_eps, std::uint64_t budget) {
  int depth = 0;
  while (2.0 * sample_resolution(ifs, depth) > min_eps && within_budget(ifs.size(), depth + 1, budget)) ++depth;
  return depth;
}

std::vector<Complex> parse_point_csv(std::istream& in) {
  std::vector<Complex> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double re = 0, im = 0;
    if (!(ls >> re >> im) || !std::isfinite(re) || !std::isfinite(im))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected re,im");
    pts.emplace_back(re, im);
  }
  return pts;
}

std::vector<Complex> load_point_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open point cloud " + path);
  return parse_point_csv(in);
}

}  // namespace hullvol::planar
