#ifndef HULLVOL_CRITERIA_CRITERIA_HPP
#define HULLVOL_CRITERIA_CRITERIA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullvol/planar/circle.hpp"
#include "hullvol/planar/cloud.hpp"
#include "hullvol/planar/packing.hpp"
#include "hullvol/planar/similarity.hpp"

namespace hullvol::criteria {

using planar::Complex;

enum class SeriesVerdict { Diverges, Converges, Inconclusive };
std::string_view to_string(SeriesVerdict v) noexcept;

inline constexpr double kRatioMargin = 0.05;
inline constexpr std::size_t kMinSeriesLevels = 6;

/// The packing series sum_j lambda^j P_{lambda^j} on a finite profile.
struct SeriesReport {
  double lambda = 0.0;
  std::vector<int> levels;
  std::vector<double> terms;
  std::vector<double> partial_sums;
  std::vector<double> term_ratios;
  double tail_median_ratio = 0.0;  ///< median of the last half of term_ratios
  double fitted_ratio = 0.0;       ///< lambda^(1 - fitted_dimension), the geometric growth of the terms
  std::optional<double> decay_exponent;  ///< p in terms ~ j^-p, when the ratio test is undecided
  double fitted_dimension = 0.0;
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::string rationale;
};

/// Decision rule: with q = lambda^(1 - d) (d the fitted packing dimension), Diverges if q >= 1.05,
/// Converges if q <= 0.95. Otherwise the terms are nearly flat and a power law j^-p is fitted to
/// all levels: Converges if p >= 1.5, Diverges if p <= 0.5, else Inconclusive.
/// Throws InsufficientLevels below 6 levels.
SeriesReport series_test(const planar::PackingProfile& profile);

/// Convergence of the packing series of the four-corner Cantor set C_beta: converges iff beta > 1/2,
/// for every lambda. Throws ParameterOutOfRange outside (0, 1).
SeriesVerdict theorem42_verdict(double beta, double lambda);

/// log 4 / (log 2 + log(1 / (1 - beta))).
double cb_dimension(double beta);

struct AuditLevel {
  int n = 0;
  double sigma = 0.0;          ///< lambda^(n/2)
  double eps = 0.0;            ///< packing radius lambda^n
  std::size_t centers = 0;
  double cross_section = 0.0;  ///< measured cap radius at sigma
  double min_ray_distance = 0.0;  ///< over checked pairs; +inf with fewer than two centers
  bool reliable = true;        ///< eps >= 2 * cloud resolution; otherwise the count is only a lower bound
  double lower_bound = 0.0;    ///< calibration * lambda^n * centers
  double running_sum = 0.0;
};

struct AuditReport {
  double lambda = 0.0;
  double delta = 0.0;
  double calibration = 0.0;
  std::vector<AuditLevel> levels;
};

/// Calibration constant C with V(sigma) ~ C sigma^2 for cones of radius delta, from a fixed-seed
/// Monte Carlo run on a small sigma grid.
double default_calibration(double delta);

/// For n = 1..n_levels, places the cusp cones of the packing centers at radius lambda^n and checks
/// their cross-sections on the sphere of radius 1 - sqrt(lambda^n) are disjoint:
/// ray distance > 2 * cross-section radius for every pair of centers.
/// Throws AuditFailure naming the first offending level and pair.
AuditReport tube_audit(const planar::PointCloud& cloud, double lambda, double delta, int n_levels,
                       std::optional<double> calibration = std::nullopt);

enum class VolumeVerdict { ZeroVolume, InfiniteVolume };
enum class TheoremTag { T1_1, T1_2, C5_5, T3_4 };
std::string_view to_string(VolumeVerdict v) noexcept;
std::string_view to_string(TheoremTag t) noexcept;

struct Classification {
  VolumeVerdict verdict = VolumeVerdict::ZeroVolume;
  TheoremTag theorem = TheoremTag::T1_1;
  std::optional<planar::Witness> witness;     ///< InfiniteVolume
  std::optional<planar::CircleParams> circle; ///< ZeroVolume
  std::optional<double> h1_lower_bound;       ///< continua: the diameter
};

/// Circle dichotomy for the attractor, sampled at `depth`.
Classification classify_self_similar(const planar::IFSModel& ifs, int depth, double tol = 1e-9);

/// Circle dichotomy for a sampled continuum. Connectedness is the caller's claim, not checked.
Classification classify_continuum(const planar::PointCloud& cloud, double tol = 1e-9);

struct H1Sufficiency {
  bool applicable = false;      ///< false when the set lies on a circle
  bool hypothesis_met = false;  ///< fitted dimension >= 0.98 and off-circle
  double fitted_dimension = 0.0;
  std::optional<Classification> classification;  ///< InfiniteVolume tagged T3_4, when met
};

inline constexpr double kH1DimensionFloor = 0.98;

/// Whether a positive-length hypothesis is plausible for the profile. Informational only.
H1Sufficiency h1_sufficiency(const planar::PackingProfile& profile, const planar::CircleVerdict& verdict);

}  // namespace hullvol::criteria

#endif  // HULLVOL_CRITERIA_CRITERIA_HPP
