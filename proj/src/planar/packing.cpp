#include "hullvol/planar/packing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hullvol/error.hpp"
#include "hullvol/simd/kernels.hpp"

namespace hullvol::planar {

namespace {

struct CellKey {
  std::int64_t x, y;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Cell {
  std::vector<double> xs, ys;
};

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorKind::ParameterOutOfRange, "packing radius must be positive");
}

}  // namespace

std::vector<std::size_t> packing_centers(std::span<const Complex> points, double eps) {
  check_eps(eps);
  // Conflicts are within 2 eps, so only the 3x3 block of cells of side 2 eps around a point matters.
  const double side = 2.0 * eps;
  const double r2 = side * side;
  std::unordered_map<CellKey, Cell, CellHash> grid;
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i].real(), y = points[i].imag();
    const auto cx = static_cast<std::int64_t>(std::floor(x / side));
    const auto cy = static_cast<std::int64_t>(std::floor(y / side));
    bool clash = false;
    for (std::int64_t dx = -1; dx <= 1 && !clash; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !clash; ++dy) {
        const auto it = grid.find(CellKey{cx + dx, cy + dy});
        if (it != grid.end()) clash = simd::any_within(it->second.xs, it->second.ys, x, y, r2);
      }
    }
    if (clash) continue;
    Cell& cell = grid[CellKey{cx, cy}];
    cell.xs.push_back(x);
    cell.ys.push_back(y);
    accepted.push_back(i);
  }
  return accepted;
}

std::size_t exact_packing_number(std::span<const Complex> points, double eps) {
  check_eps(eps);
  const std::size_t n = points.size();
  if (n > kExactPackingLimit)
    throw Error(ErrorKind::ParameterOutOfRange, "exact packing is limited to " + std::to_string(kExactPackingLimit) + " points");
  const double r2 = 4.0 * eps * eps;
  std::vector<std::uint32_t> conflicts(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::norm(points[i] - points[j]) <= r2) conflicts[i] |= (1u << j);

  // Maximum independent set of the conflict graph.
  std::size_t best = 0;
  std::function<void(std::uint32_t, std::size_t)> search = [&](std::uint32_t open, std::size_t taken) {
    if (open == 0) {
      best = std::max(best, taken);
      return;
    }
    if (taken + static_cast<std::size_t>(std::popcount(open)) <= best) return;
    const int v = std::countr_zero(open);
    const std::uint32_t bit = 1u << v;
    search(open & ~bit & ~conflicts[v], taken + 1);
    search(open & ~bit, taken);
  };
  search((1u << n) - 1u, 0);
  return best;
}

std::size_t packing_number(const PointCloud& cloud, double eps, PackingEstimator estimator) {
  if (estimator == PackingEstimator::Exact) return exact_packing_number(cloud.points(), eps);
  return packing_centers(cloud.points(), eps).size();
}

bool packing_reliable(const PointCloud& cloud, double eps) noexcept { return eps >= 2.0 * cloud.resolution(); }

PackingProfile packing_profile(const PointCloud& cloud, double lambda, int j_max, PackingEstimator estimator) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "lambda must lie in (0, 1)");
  if (j_max < 1) throw Error(ErrorKind::ParameterOutOfRange, "j_max must be at least 1");
  PackingProfile profile;
  profile.lambda = lambda;
  profile.estimator = estimator;
  for (int j = 1; j <= j_max; ++j) {
    const double eps = std::pow(lambda, j);
    if (!packing_reliable(cloud, eps)) {
      std::ostringstream msg;
      msg << "ResolutionTooCoarse: levels " << j << ".." << j_max << " dropped (lambda^" << j << " = " << eps
          << " < 2 * resolution = " << 2.0 * cloud.resolution() << ")";
      profile.warnings.push_back(msg.str());
      break;
    }
    double count = static_cast<double>(packing_number(cloud, eps, estimator));
    if (!profile.levels.empty()) count = std::max(count, profile.levels.back().count);
    profile.levels.push_back({j, count});
  }
  if (profile.levels.empty())
    throw Error(ErrorKind::ResolutionTooCoarse, "no packing level is resolvable at this cloud resolution");
  return profile;
}

PackingProfile remark38_construction(int j_max) {
  if (j_max < 2 || j_max > 63) throw Error(ErrorKind::ParameterOutOfRange, "j_max must lie in [2, 63]");
  PackingProfile profile;
  profile.lambda = 0.25;
  profile.estimator = PackingEstimator::Exact;
  for (int j = 1; j <= j_max; ++j) {
    const unsigned __int128 four_j = static_cast<unsigned __int128>(1) << (2 * j);
    const unsigned __int128 q = four_j / static_cast<unsigned __int128>(j * j);
    profile.levels.push_back({j, std::max(1.0, static_cast<double>(q))});
  }
  return profile;
}

DimensionEstimate minkowski_dimension(const PackingProfile& profile) {
  const std::size_t n = profile.levels.size();
  if (n < 4) throw Error(ErrorKind::InsufficientLevels, "dimension estimate needs at least 4 levels");
  const double scale = std::log(1.0 / profile.lambda);
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = profile.levels[k].j * scale;
    ys[k] = std::log(profile.levels[k].count);
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  DimensionEstimate est;
  est.fitted = sxy / sxx;
  est.lower = std::numeric_limits<double>::infinity();
  est.upper = -std::numeric_limits<double>::infinity();
  for (std::size_t k = n / 2; k < n; ++k) {
    const double ratio = ys[k] / xs[k];
    est.lower = std::min(est.lower, ratio);
    est.upper = std::max(est.upper, ratio);
  }
  return est;
}

}  // namespace hullvol::planar
