#ifndef HULLVOL_PLANAR_CLOUD_HPP
#define HULLVOL_PLANAR_CLOUD_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hullvol/planar/similarity.hpp"

namespace hullvol::planar {

/// Finite sample of a planar set: every point of the set lies within `resolution` of a sample.
class PointCloud {
 public:
  /// Throws EmptyCloud for no points, ParameterOutOfRange for resolution <= 0.
  PointCloud(std::vector<Complex> points, double resolution);

  const std::vector<Complex>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double resolution() const noexcept { return resolution_; }
  double diameter() const noexcept;

 private:
  std::vector<Complex> points_;
  double resolution_;
};

/// Default cap on depth * N^depth for attractor_sample.
inline constexpr std::uint64_t kDefaultSampleBudget = std::uint64_t{1} << 26;

/// All N^depth images of the fixed point of S_1 under depth-fold compositions, ordered
/// lexicographically by the composition word (S_{i1} o ... o S_{id}). Resolution is
/// (max ratio)^depth times the diameter of the invariant disc. Throws BudgetExceeded.
PointCloud attractor_sample(const IFSModel& ifs, int depth, std::uint64_t budget = kDefaultSampleBudget);

/// Smallest depth whose resolution allows packing down to radius min_eps (eps >= 2 resolution),
/// capped at the budget. Returns the deepest affordable depth if the target is out of reach.
int depth_for_radius(const IFSModel& ifs, double min_eps, std::uint64_t budget = kDefaultSampleBudget);

/// `re,im` per line; blank lines and `#` comments ignored.
std::vector<Complex> parse_point_csv(std::istream& in);
std::vector<Complex> load_point_csv(const std::string& path);

}  // namespace hullvol::planar

#endif  // HULLVOL_PLANAR_CLOUD_HPP
