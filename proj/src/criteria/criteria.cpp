#include "hullvol/criteria/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "hullvol/error.hpp"
#include "hullvol/tube/tube.hpp"

namespace hullvol::criteria {

std::string_view to_string(SeriesVerdict v) noexcept {
  switch (v) {
    case SeriesVerdict::Diverges: return "Diverges";
    case SeriesVerdict::Converges: return "Converges";
    case SeriesVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(VolumeVerdict v) noexcept {
  return v == VolumeVerdict::ZeroVolume ? "ZeroVolume" : "InfiniteVolume";
}

std::string_view to_string(TheoremTag t) noexcept {
  switch (t) {
    case TheoremTag::T1_1: return "T1.1";
    case TheoremTag::T1_2: return "T1.2";
    case TheoremTag::C5_5: return "C5.5";
    case TheoremTag::T3_4: return "T3.4";
  }
  return "?";
}

namespace {

void check_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0))
    throw Error(ErrorKind::ParameterOutOfRange, std::string(name) + " must lie in (0, 1)");
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double hi = v[mid];
  return 0.5 * (*std::max_element(v.begin(), v.begin() + mid) + hi);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

}  // namespace

SeriesReport series_test(const planar::PackingProfile& profile) {
  if (profile.size() < kMinSeriesLevels)
    throw Error(ErrorKind::InsufficientLevels, "series test needs at least " + std::to_string(kMinSeriesLevels) +
                                                   " levels, profile has " + std::to_string(profile.size()));
  SeriesReport rep;
  rep.lambda = profile.lambda;
  double sum = 0.0;
  for (const auto& lv : profile.levels) {
    const double t = std::pow(profile.lambda, lv.j) * lv.count;
    rep.levels.push_back(lv.j);
    rep.terms.push_back(t);
    sum += t;
    rep.partial_sums.push_back(sum);
  }
  for (std::size_t i = 1; i < rep.terms.size(); ++i) rep.term_ratios.push_back(rep.terms[i] / rep.terms[i - 1]);
  const std::size_t tail = (rep.term_ratios.size() + 1) / 2;
  rep.tail_median_ratio = median({rep.term_ratios.end() - static_cast<std::ptrdiff_t>(tail), rep.term_ratios.end()});

  rep.fitted_dimension = planar::minkowski_dimension(profile).fitted;
  rep.fitted_ratio = std::pow(profile.lambda, 1.0 - rep.fitted_dimension);

  if (rep.fitted_ratio >= 1.0 + kRatioMargin) {
    rep.verdict = SeriesVerdict::Diverges;
    rep.rationale = "fitted term ratio " + fmt(rep.fitted_ratio) + " >= 1.05";
    return rep;
  }
  if (rep.fitted_ratio <= 1.0 - kRatioMargin) {
    rep.verdict = SeriesVerdict::Converges;
    rep.rationale = "fitted term ratio " + fmt(rep.fitted_ratio) + " <= 0.95";
    return rep;
  }

  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) pts.emplace_back(static_cast<double>(rep.levels[i]), rep.terms[i]);
  const double p = -tube::fit_exponent(pts).slope;
  rep.decay_exponent = p;
  const std::string head = "fitted term ratio " + fmt(rep.fitted_ratio) + " within 5% of 1; terms ~ j^-" + fmt(p);
  if (p >= 1.5) {
    rep.verdict = SeriesVerdict::Converges;
    rep.rationale = head + ", p >= 1.5";
  } else if (p <= 0.5) {
    rep.verdict = SeriesVerdict::Diverges;
    rep.rationale = head + ", p <= 0.5";
  } else {
    rep.verdict = SeriesVerdict::Inconclusive;
    rep.rationale = head + ", p between 0.5 and 1.5";
  }
  return rep;
}

SeriesVerdict theorem42_verdict(double beta, double lambda) {
  check_unit_open(beta, "beta");
  check_unit_open(lambda, "lambda");
  return beta > 0.5 ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
}

double cb_dimension(double beta) {
  check_unit_open(beta, "beta");
  return std::log(4.0) / (std::log(2.0) + std::log(1.0 / (1.0 - beta)));
}

double default_calibration(double delta) {
  const tube::CuspCone cone(delta, {1.0, 0.0, 0.0});
  std::vector<std::pair<double, double>> pts;
  for (double s : {0.1, 0.05}) {
    const auto est = tube::tail_volume_mc(cone, tube::ShellParams::from_sigma(s), 64000, 1);
    pts.emplace_back(s, est.mean);
  }
  return tube::calibration_constant(pts);
}

AuditReport tube_audit(const planar::PointCloud& cloud, double lambda, double delta, int n_levels,
                       std::optional<double> calibration) {
  check_unit_open(lambda, "lambda");
  if (n_levels < 1) throw Error(ErrorKind::ParameterOutOfRange, "audit needs at least one level");
  AuditReport rep;
  rep.lambda = lambda;
  rep.delta = delta;
  rep.calibration = calibration ? *calibration : default_calibration(delta);

  double max_abs2 = 0.0;
  for (const Complex& z : cloud.points()) max_abs2 = std::max(max_abs2, std::norm(z));

  double running = 0.0;
  for (int n = 1; n <= n_levels; ++n) {
    AuditLevel lv;
    lv.n = n;
    lv.eps = std::pow(lambda, n);
    lv.sigma = std::sqrt(lv.eps);
    lv.reliable = planar::packing_reliable(cloud, lv.eps);
    lv.cross_section = tube::cross_section_radius(lv.sigma, delta).measured;
    const std::vector<std::size_t> idx = planar::packing_centers(cloud.points(), lv.eps);
    lv.centers = idx.size();
    lv.min_ray_distance = std::numeric_limits<double>::infinity();

    // Chordal distance >= 2|a - b| / (1 + M^2), so only pairs closer than `reach` in the plane can fail.
    const double limit = 2.0 * lv.cross_section;
    // The cell is widened to a few packing radii so nearest centers are measured too.
    const double reach = std::max(limit * (1.0 + max_abs2) / (2.0 * (1.0 - lv.sigma)), 3.0 * lv.eps);
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    auto cell = [&](double v) { return static_cast<std::int64_t>(std::floor(v / reach)); };
    auto key = [](std::int64_t cx, std::int64_t cy) {
      return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffu);
    };
    for (std::size_t i : idx) {
      const Complex a = cloud.points()[i];
      const std::int64_t cx = cell(a.real()), cy = cell(a.imag());
      for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(key(cx + dx, cy + dy));
          if (it == grid.end()) continue;
          for (std::size_t k : it->second) {
            const Complex b = cloud.points()[k];
            const double d = tube::ray_distance(hyper::ExtPoint(a), hyper::ExtPoint(b), lv.sigma);
            lv.min_ray_distance = std::min(lv.min_ray_distance, d);
            if (!(d > limit)) {
              std::ostringstream os;
              os.precision(17);
              os << "level " << n << ": cross-sections of centers " << k << " (" << b.real() << ", " << b.imag()
                 << ") and " << i << " (" << a.real() << ", " << a.imag() << ") overlap: ray distance " << d
                 << " <= 2R = " << limit << " at sigma " << lv.sigma << "; use a smaller delta";
              throw Error(ErrorKind::AuditFailure, os.str());
            }
          }
        }
      grid[key(cx, cy)].push_back(i);
    }
    lv.lower_bound = rep.calibration * lv.eps * static_cast<double>(lv.centers);
    running += lv.lower_bound;
    lv.running_sum = running;
    rep.levels.push_back(lv);
  }
  return rep;
}

Classification classify_self_similar(const planar::IFSModel& ifs, int depth, double tol) {
  const planar::PointCloud cloud = planar::attractor_sample(ifs, depth);
  const planar::CircleVerdict cv = planar::circle_test(cloud.points(), tol);
  Classification c;
  c.theorem = TheoremTag::C5_5;
  if (cv.on_circle) {
    c.verdict = VolumeVerdict::ZeroVolume;
    c.circle = cv.circle;
  } else {
    c.verdict = VolumeVerdict::InfiniteVolume;
    c.witness = cv.witness;
  }
  return c;
}

Classification classify_continuum(const planar::PointCloud& cloud, double tol) {
  const planar::CircleVerdict cv = planar::circle_test(cloud.points(), tol);
  Classification c;
  c.theorem = TheoremTag::T1_1;
  c.h1_lower_bound = cloud.diameter();
  if (cv.on_circle) {
    c.verdict = VolumeVerdict::ZeroVolume;
    c.circle = cv.circle;
  } else {
    c.verdict = VolumeVerdict::InfiniteVolume;
    c.witness = cv.witness;
  }
  return c;
}

H1Sufficiency h1_sufficiency(const planar::PackingProfile& profile, const planar::CircleVerdict& verdict) {
  H1Sufficiency out;
  out.fitted_dimension = planar::minkowski_dimension(profile).fitted;
  out.applicable = !verdict.on_circle;
  out.hypothesis_met = out.applicable && out.fitted_dimension >= kH1DimensionFloor;
  if (out.hypothesis_met) {
    Classification c;
    c.verdict = VolumeVerdict::InfiniteVolume;
    c.theorem = TheoremTag::T3_4;
    c.witness = verdict.witness;
    out.classification = c;
  }
  return out;
}

}  // namespace hullvol::criteria
