#include "cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hullvol/bridge/bridge.hpp"
#include "hullvol/criteria/criteria.hpp"
#include "hullvol/error.hpp"
#include "hullvol/hyperbolic/models.hpp"
#include "hullvol/planar/circle.hpp"
#include "hullvol/planar/cloud.hpp"
#include "hullvol/planar/packing.hpp"
#include "hullvol/report/json.hpp"
#include "hullvol/tube/tube.hpp"

namespace hullvol::cli {

namespace {

using planar::Complex;
using report::Json;

struct Config {
  std::string command;
  std::string builtin;
  std::string ifs_path;
  std::string cloud_path;
  bool continuum = false;
  double resolution = 1e-3;
  double beta = 0.5;
  double lambda = 0.25;
  double delta = 0.5;
  int depth = 0;  // 0: command default
  int j_max = 40;
  std::uint64_t samples = 1000000;
  std::optional<std::uint64_t> seed;
  std::vector<double> sigmas{0.2, 0.1, 0.05, 0.02};
  bool sweep = false;
  std::vector<double> v_band{1.8, 2.2};
  std::vector<double> r_band{1.95, 2.05};
  std::size_t count = 10;
  int depth_cap = 40;
  int audit_levels = 0;
  double tol = 0.05;
  std::string out;
  std::string format;
};

// Thrown for configuration problems detected here rather than in the library.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json config_json(const Config& c) {
  Json j = {{"command", c.command}};
  if (!c.builtin.empty()) j["builtin"] = c.builtin;
  if (!c.ifs_path.empty()) j["ifs"] = c.ifs_path;
  if (!c.cloud_path.empty()) {
    j["cloud"] = c.cloud_path;
    j["continuum"] = c.continuum;
    j["resolution"] = c.resolution;
  }
  j["beta"] = c.beta;
  j["lambda"] = c.lambda;
  j["delta"] = c.delta;
  j["depth"] = c.depth;
  j["j_max"] = c.j_max;
  j["samples"] = c.samples;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["sigma"] = c.sigmas;
  j["sweep"] = c.sweep;
  j["v_band"] = c.v_band;
  j["r_band"] = c.r_band;
  j["count"] = c.count;
  j["depth_cap"] = c.depth_cap;
  j["audit_levels"] = c.audit_levels;
  j["tol"] = c.tol;
  j["format"] = c.format;
  if (!c.out.empty()) j["out"] = c.out;
  return j;
}

// ---- built-in sets ----------------------------------------------------------------------------

struct Input {
  std::string name;
  std::optional<planar::IFSModel> ifs;
  std::optional<planar::PointCloud> cloud;
  bool continuum = false;
  std::optional<std::array<Complex, 4>> quad;  // external quadruple (single-map orbit)
};

planar::IFSModel sierpinski() {
  const double h = std::sqrt(3.0) / 2.0;
  return planar::IFSModel({planar::Similarity(0.5, 0.0, {0.0, 0.0}), planar::Similarity(0.5, 0.0, {0.5, 0.0}),
                           planar::Similarity(0.5, 0.0, {0.25, h / 2.0})},
                          "sierpinski");
}

planar::PointCloud circle_cloud() {
  std::vector<Complex> pts;
  for (int k = 0; k < 100; ++k) pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 100.0));
  return planar::PointCloud(std::move(pts), 2.0 * std::numbers::pi / 100.0);
}

planar::PointCloud square_boundary_cloud() {
  std::vector<Complex> pts;
  const int m = 100;
  for (int k = 0; k < m; ++k) {
    const double s = static_cast<double>(k) / m;
    pts.emplace_back(s, 0.0);
    pts.emplace_back(1.0, s);
    pts.emplace_back(1.0 - s, 1.0);
    pts.emplace_back(0.0, 1.0 - s);
  }
  return planar::PointCloud(std::move(pts), 1.0 / m);
}

Input resolve_input(const Config& c) {
  const int given = !c.builtin.empty() + !c.ifs_path.empty() + !c.cloud_path.empty();
  if (given > 1) throw UsageError("give only one of --builtin, --ifs, --cloud");
  Input in;
  if (!c.ifs_path.empty()) {
    in.name = c.ifs_path;
    in.ifs = planar::load_ifs(c.ifs_path);
    return in;
  }
  if (!c.cloud_path.empty()) {
    in.name = c.cloud_path;
    in.cloud = planar::PointCloud(planar::load_point_csv(c.cloud_path), c.resolution);
    in.continuum = c.continuum;
    return in;
  }
  const std::string b = c.builtin.empty() ? "cantor4" : c.builtin;
  in.name = b;
  if (b == "cantor4") {
    in.ifs = planar::cantor_four_corner(c.beta);
  } else if (b == "sierpinski") {
    in.ifs = sierpinski();
  } else if (b == "segment") {
    in.ifs = planar::IFSModel({planar::Similarity(0.5, 0.0, 0.0), planar::Similarity(0.5, 0.0, 0.5)}, "segment");
  } else if (b == "orbit") {
    in.ifs = planar::IFSModel({planar::Similarity(0.5, 0.3, {0.1, 0.2})}, "orbit");
    in.quad = std::array<Complex, 4>{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(1, 1)};
  } else if (b == "circle") {
    in.cloud = circle_cloud();
    in.continuum = true;
  } else if (b == "square-boundary") {
    in.cloud = square_boundary_cloud();
    in.continuum = true;
  } else {
    throw UsageError("unknown builtin '" + b + "' (cantor4, sierpinski, segment, orbit, circle, square-boundary)");
  }
  return in;
}

planar::PointCloud input_cloud(const Input& in, int depth) {
  if (in.cloud) return *in.cloud;
  return planar::attractor_sample(*in.ifs, depth);
}

void check_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw UsageError(std::string("--") + name + " must lie in (0, 1)");
}

// ---- commands ---------------------------------------------------------------------------------

struct Outcome {
  int code = kExitPass;
  std::string text;
};

Outcome emit_json(const Config& c, Json body, bool pass) {
  Json j = {{"config", config_json(c)}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["pass"] = pass;
  return {pass ? kExitPass : kExitCheckFailed, j.dump(2) + "\n"};
}

Outcome cmd_tube(const Config& c) {
  if (!c.seed) throw UsageError("tube needs --seed");
  if (c.sigmas.size() < 4) throw UsageError("tube needs at least 4 sigma values");
  for (double s : c.sigmas) check_unit_open(s, "sigma");
  if (!(c.delta > 0.0)) throw UsageError("--delta must be positive");
  if (!(c.v_band[0] <= c.v_band[1]) || !(c.r_band[0] <= c.r_band[1])) throw UsageError("bands must be given as lo hi");
  const std::vector<double> deltas = c.sweep ? std::vector<double>{0.25, 0.5, 1.0} : std::vector<double>{c.delta};

  // Fixed boundary pairs for the exact ray-distance identity.
  const std::array<std::pair<Complex, Complex>, 3> pairs{
      {{Complex(0, 0), Complex(1, 0)}, {Complex(0.3, -0.7), Complex(2, 1.5)}, {Complex(1, 0), Complex(-1, 0)}}};

  Json rows = Json::array();
  Json fits = Json::array();
  bool pass = true;
  std::ostringstream csv;
  for (double delta : deltas) {
    const tube::CuspCone cone(delta, {1.0, 0.0, 0.0});
    std::vector<std::pair<double, double>> vol, rad, rad_m;
    double ray_dev = 0.0;
    for (double s : c.sigmas) {
      const auto shell = tube::ShellParams::from_sigma(s);
      const auto est = tube::tail_volume_mc(cone, shell, c.samples, *c.seed);
      const auto cs = tube::cross_section_radius(shell, delta);
      for (const auto& [a, b] : pairs) {
        const double d = tube::ray_distance(hyper::ExtPoint(a), hyper::ExtPoint(b), s);
        const double direct =
            (1.0 - s) * norm(hyper::plane_to_sphere(hyper::ExtPoint(a)) - hyper::plane_to_sphere(hyper::ExtPoint(b)));
        ray_dev = std::max(ray_dev, std::abs(d / direct - 1.0));
      }
      vol.emplace_back(s, est.mean);
      rad.emplace_back(s, cs.proxy);
      rad_m.emplace_back(s, cs.measured);
      rows.push_back({{"sigma", s},
                      {"t", shell.t()},
                      {"estimate", est.mean},
                      {"std_error", est.std_error},
                      {"samples", est.samples},
                      {"seed", *c.seed},
                      {"delta", delta},
                      {"sigma_cut", est.sigma_cut},
                      {"r_proxy", cs.proxy},
                      {"r_measured", cs.measured}});
      csv << num(s) << ',' << num(shell.t()) << ',' << num(est.mean) << ',' << num(est.std_error) << ','
          << est.samples << ',' << *c.seed << ',' << num(delta) << ',' << num(est.sigma_cut) << ',' << num(cs.proxy)
          << ',' << num(cs.measured) << '\n';
    }
    const auto fv = tube::fit_exponent(vol);
    const auto fr = tube::fit_exponent(rad);
    const auto fm = tube::fit_exponent(rad_m);
    const double cal = tube::calibration_constant(vol);
    const bool ok = fv.slope >= c.v_band[0] && fv.slope <= c.v_band[1] && fr.slope >= c.r_band[0] &&
                    fr.slope <= c.r_band[1] && ray_dev <= 1e-12;
    pass = pass && ok;
    fits.push_back({{"delta", delta},
                    {"slope_V", fv.slope},
                    {"r2_V", fv.r2},
                    {"slope_R", fr.slope},
                    {"r2_R", fr.r2},
                    {"slope_R_measured", fm.slope},
                    {"calibration", cal},
                    {"ray_identity_max_dev", ray_dev},
                    {"pass", ok}});
  }

  if (c.format == "json") return emit_json(c, {{"rows", rows}, {"fits", fits}}, pass);

  std::ostringstream os;
  os << "# config " << config_json(c).dump() << '\n';
  os << "sigma,t,estimate,std_error,samples,seed,delta,sigma_cut,r_proxy,r_measured\n" << csv.str();
  for (const auto& f : fits)
    os << "# fit delta=" << num(f["delta"].get<double>()) << " slope_V=" << num(f["slope_V"].get<double>())
       << " r2_V=" << num(f["r2_V"].get<double>()) << " slope_R=" << num(f["slope_R"].get<double>())
       << " slope_R_measured=" << num(f["slope_R_measured"].get<double>())
       << " calibration=" << num(f["calibration"].get<double>()) << " pass=" << (f["pass"].get<bool>() ? 1 : 0)
       << '\n';
  return {pass ? kExitPass : kExitCheckFailed, os.str()};
}

Outcome cmd_classify(const Config& c) {
  const Input in = resolve_input(c);
  if (in.quad) throw UsageError("the orbit builtin is only available for bridge");
  criteria::Classification cls;
  if (in.ifs) {
    cls = criteria::classify_self_similar(*in.ifs, c.depth > 0 ? c.depth : 6);
  } else {
    if (!in.continuum) throw UsageError("point clouds are classified as continua only; pass --continuum");
    cls = criteria::classify_continuum(*in.cloud);
  }
  return emit_json(c, {{"input", in.name}, {"classification", report::to_json(cls)}}, true);
}

Outcome cmd_series(const Config& c) {
  check_unit_open(c.lambda, "lambda");
  Json body = Json::object();
  planar::PackingProfile profile;
  std::optional<planar::CircleVerdict> circle;
  std::optional<planar::PointCloud> cloud;
  if (c.builtin == "remark38") {
    profile = planar::remark38_construction(c.j_max);
    body["input"] = "remark38";
    body["expected"] = "Converges";
  } else {
    const Input in = resolve_input(c);
    if (in.quad) throw UsageError("the orbit builtin is only available for bridge");
    cloud = input_cloud(in, c.depth > 0 ? c.depth : 10);
    profile = planar::packing_profile(*cloud, c.lambda, c.j_max);
    circle = planar::circle_test(cloud->points());
    body["input"] = in.name;
  }
  const auto rep = criteria::series_test(profile);
  body["profile"] = report::to_json(profile);
  body["series"] = report::to_json(rep);
  bool pass = true;
  if (c.builtin == "remark38") pass = rep.verdict == criteria::SeriesVerdict::Converges;
  if (c.builtin.empty() || c.builtin == "cantor4") {
    if (c.ifs_path.empty() && c.cloud_path.empty()) {
      const auto expected = criteria::theorem42_verdict(c.beta, c.lambda);
      body["expected"] = std::string(to_string(expected));
      pass = rep.verdict == expected;
    }
  }
  if (circle) {
    const auto h1 = criteria::h1_sufficiency(profile, *circle);
    body["h1_sufficiency"] = {{"applicable", h1.applicable},
                              {"hypothesis_met", h1.hypothesis_met},
                              {"fitted_dimension", h1.fitted_dimension}};
  }
  if (c.audit_levels > 0 && cloud) {
    body["audit"] = report::to_json(criteria::tube_audit(*cloud, c.lambda, c.delta, c.audit_levels));
  }
  return emit_json(c, body, pass);
}

Outcome cmd_bridge(const Config& c) {
  if (c.count < 1) throw UsageError("--count must be at least 1");
  Json body = Json::object();
  bridge::TetraFamily fam = [&] {
    if ((c.builtin.empty() || c.builtin == "cantor4") && c.ifs_path.empty() && c.cloud_path.empty()) {
      check_unit_open(c.beta, "beta");
      body["input"] = "cantor4";
      body["construction"] = "bridge";
      return bridge::bridge_family(c.beta, c.count);
    }
    const Input in = resolve_input(c);
    if (!in.ifs) throw UsageError("bridge needs a self-similar input");
    std::array<Complex, 4> quad;
    if (in.quad) {
      quad = *in.quad;
    } else {
      const auto sample = planar::attractor_sample(*in.ifs, c.depth > 0 ? c.depth : 6);
      const auto verdict = planar::circle_test(sample.points());
      if (verdict.on_circle) throw Error(ErrorKind::NoValidQuad, "the attractor sample lies on a circle");
      quad = verdict.witness->points;
    }
    Json q = Json::array();
    for (const auto& z : quad) q.push_back(report::complex_json(z));
    body["input"] = in.name;
    body["construction"] = "itinerary";
    body["quad"] = q;
    return bridge::general_family(*in.ifs, quad, c.count, c.depth_cap);
  }();
  body["family"] = report::to_json(fam);
  return emit_json(c, body, true);
}

Outcome cmd_dims(const Config& c) {
  check_unit_open(c.lambda, "lambda");
  const Input in = resolve_input(c);
  if (in.quad) throw UsageError("the orbit builtin is only available for bridge");
  const auto cloud = input_cloud(in, c.depth > 0 ? c.depth : 10);
  const auto profile = planar::packing_profile(cloud, c.lambda, c.j_max);
  const auto est = planar::minkowski_dimension(profile);
  Json body = {{"input", in.name}, {"profile", report::to_json(profile)}, {"estimate", report::to_json(est)}};
  bool pass = true;
  if (in.name == "cantor4") {
    const double expected = criteria::cb_dimension(c.beta);
    body["expected"] = expected;
    body["difference"] = est.fitted - expected;
    pass = std::abs(est.fitted - expected) <= c.tol;
  }
  return emit_json(c, body, pass);
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::AuditFailure:
    case ErrorKind::CertificateFailure:
    case ErrorKind::DepthCapExceeded:
    case ErrorKind::NoValidQuad:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

void add_input_options(CLI::App* sub, Config& c) {
  sub->add_option("--builtin", c.builtin, "cantor4, sierpinski, segment, orbit, circle, square-boundary");
  sub->add_option("--ifs", c.ifs_path, "IFS text file");
  sub->add_option("--cloud", c.cloud_path, "point cloud CSV (re,im per line)");
  sub->add_flag("--continuum", c.continuum, "the cloud samples a continuum");
  sub->add_option("--resolution", c.resolution, "sampling resolution of --cloud");
  sub->add_option("--beta", c.beta, "four-corner Cantor parameter");
  sub->add_option("--depth", c.depth, "attractor sampling depth");
}

void add_output_options(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out, "write the report here instead of stdout");
  sub->add_option("--format", c.format, "csv or json (default: csv for tube, json otherwise)")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Hyperbolic convex hull volume experiments", "hullvol"};
  app.require_subcommand(1);

  auto* tube = app.add_subcommand("tube", "cusp-cone volumes and cross-sections over a sigma grid");
  tube->add_option("--delta", c.delta, "hyperbolic radius of the ball at the origin");
  tube->add_flag("--sweep", c.sweep, "run delta = 0.25, 0.5, 1.0");
  tube->add_option("--sigma", c.sigmas, "comma-separated sigma grid")->delimiter(',');
  tube->add_option("--samples", c.samples, "Monte Carlo samples per sigma");
  tube->add_option("--seed", c.seed, "Monte Carlo seed (required)");
  tube->add_option("--v-band", c.v_band, "accepted band for the volume exponent")->expected(2);
  tube->add_option("--r-band", c.r_band, "accepted band for the cross-section exponent")->expected(2);
  add_output_options(tube, c);

  auto* classify = app.add_subcommand("classify", "zero or infinite hull volume");
  add_input_options(classify, c);
  add_output_options(classify, c);

  auto* series = app.add_subcommand("series", "packing series test");
  add_input_options(series, c);
  series->add_option("--lambda", c.lambda, "packing scale ratio");
  series->add_option("--jmax", c.j_max, "deepest packing level");
  series->add_option("--audit-levels", c.audit_levels, "also audit cusp-cone disjointness over this many levels");
  series->add_option("--delta", c.delta, "cone radius for the audit");
  add_output_options(series, c);

  auto* bridge = app.add_subcommand("bridge", "disjoint ideal tetrahedron families");
  add_input_options(bridge, c);
  bridge->add_option("--count", c.count, "family size");
  bridge->add_option("--depth-cap", c.depth_cap, "deepest itinerary searched");
  add_output_options(bridge, c);

  auto* dims = app.add_subcommand("dims", "packing dimension estimate");
  add_input_options(dims, c);
  dims->add_option("--lambda", c.lambda, "packing scale ratio");
  dims->add_option("--jmax", c.j_max, "deepest packing level");
  dims->add_option("--tol", c.tol, "accepted distance from the closed form");
  add_output_options(dims, c);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (c.format.empty()) c.format = tube->parsed() ? "csv" : "json";
  Outcome res;
  try {
    if (tube->parsed()) {
      c.command = "tube";
      res = cmd_tube(c);
    } else if (classify->parsed()) {
      c.command = "classify";
      res = cmd_classify(c);
    } else if (series->parsed()) {
      c.command = "series";
      res = cmd_series(c);
    } else if (bridge->parsed()) {
      c.command = "bridge";
      res = cmd_bridge(c);
    } else {
      c.command = "dims";
      res = cmd_dims(c);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }

  if (c.out.empty()) {
    out << res.text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << c.out << '\n';
      return kExitUsage;
    }
    f << res.text;
  }
  return res.code;
}

}  // namespace hullvol::cli
