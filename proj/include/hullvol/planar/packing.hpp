#ifndef HULLVOL_PLANAR_PACKING_HPP
#define HULLVOL_PLANAR_PACKING_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hullvol/planar/cloud.hpp"

namespace hullvol::planar {

// Closed balls of radius eps are disjoint iff their centers are more than 2 eps apart;
// centers exactly 2 eps apart conflict.

enum class PackingEstimator { Greedy, Exact };

/// Largest cloud the exact estimator accepts.
inline constexpr std::size_t kExactPackingLimit = 24;

/// Indices of the greedy maximal packing: points scanned in cloud order, each accepted if it is
/// more than 2 eps from every accepted point. Throws ParameterOutOfRange for eps <= 0.
std::vector<std::size_t> packing_centers(std::span<const Complex> points, double eps);

/// Maximum packing by exhaustive branch and bound. Throws ParameterOutOfRange above kExactPackingLimit points.
std::size_t exact_packing_number(std::span<const Complex> points, double eps);

/// Packing number of the cloud at radius eps. The estimate is unreliable when
/// eps < 2 * resolution; see packing_reliable().
std::size_t packing_number(const PointCloud& cloud, double eps, PackingEstimator estimator = PackingEstimator::Greedy);

bool packing_reliable(const PointCloud& cloud, double eps) noexcept;

struct PackingLevel {
  int j = 0;
  double count = 0.0;  ///< integral value; doubles carry counts beyond 2^64 for synthetic profiles
};

/// Packing counts P_{lambda^j} for j = 1..J.
struct PackingProfile {
  double lambda = 0.5;
  std::vector<PackingLevel> levels;
  PackingEstimator estimator = PackingEstimator::Greedy;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return levels.size(); }
};

/// Counts for j = 1..j_max, truncated (with a warning) where lambda^j < 2 * resolution and
/// forced nondecreasing. Throws ParameterOutOfRange on a bad lambda, ResolutionTooCoarse if no
/// level survives truncation.
PackingProfile packing_profile(const PointCloud& cloud, double lambda, int j_max,
                               PackingEstimator estimator = PackingEstimator::Greedy);

/// Synthetic counts max(1, floor(4^j / j^2)) with lambda = 1/4 (a dimension-one set whose
/// packing series converges). Requires 2 <= j_max <= 63.
PackingProfile remark38_construction(int j_max);

struct DimensionEstimate {
  double lower = 0.0;
  double upper = 0.0;
  double fitted = 0.0;
};

/// fitted: least-squares slope of log P against j log(1/lambda). lower/upper: extreme per-level
/// ratios log P / (j log(1/lambda)) over the last half of the levels. Throws InsufficientLevels below 4 levels.
DimensionEstimate minkowski_dimension(const PackingProfile& profile);

}  // namespace hullvol::planar

#endif  // HULLVOL_PLANAR_PACKING_HPP
