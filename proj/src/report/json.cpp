#include "hullvol/report/json.hpp"

#include <cmath>

namespace hullvol::report {

Json complex_json(planar::Complex z) { return Json::array({z.real(), z.imag()}); }

Json ext_point_json(const hyper::ExtPoint& p) {
  if (p.is_infinite()) return "inf";
  return complex_json(p.value());
}

Json to_json(const planar::PackingProfile& p) {
  Json levels = Json::array();
  for (const auto& lv : p.levels) levels.push_back({{"j", lv.j}, {"count", lv.count}});
  return {{"lambda", p.lambda},
          {"estimator", p.estimator == planar::PackingEstimator::Exact ? "exact" : "greedy"},
          {"levels", levels},
          {"warnings", p.warnings}};
}

Json to_json(const planar::DimensionEstimate& d) {
  return {{"fitted", d.fitted}, {"lower", d.lower}, {"upper", d.upper}};
}

Json to_json(const criteria::SeriesReport& r) {
  Json j = {{"verdict", std::string(to_string(r.verdict))},
            {"lambda", r.lambda},
            {"levels", r.levels},
            {"terms", r.terms},
            {"partial_sums", r.partial_sums},
            {"term_ratios", r.term_ratios},
            {"tail_median_ratio", r.tail_median_ratio},
            {"fitted_ratio", r.fitted_ratio},
            {"fitted_dimension", r.fitted_dimension}};
  j["decay_exponent"] = r.decay_exponent ? Json(*r.decay_exponent) : Json(nullptr);
  j["rationale"] = r.rationale;
  return j;
}

Json to_json(const criteria::AuditReport& r) {
  Json levels = Json::array();
  for (const auto& lv : r.levels) {
    Json l = {{"n", lv.n},
              {"sigma", lv.sigma},
              {"eps", lv.eps},
              {"centers", lv.centers},
              {"cross_section", lv.cross_section}};
    l["min_ray_distance"] = std::isfinite(lv.min_ray_distance) ? Json(lv.min_ray_distance) : Json(nullptr);
    l["reliable"] = lv.reliable;
    l["lower_bound"] = lv.lower_bound;
    l["running_sum"] = lv.running_sum;
    levels.push_back(l);
  }
  return {{"lambda", r.lambda}, {"delta", r.delta}, {"calibration", r.calibration}, {"levels", levels}};
}

Json to_json(const planar::CircleParams& c) {
  if (c.is_line)
    return {{"kind", "line"}, {"point", complex_json(c.point)}, {"direction", complex_json(c.direction)}};
  return {{"kind", "circle"}, {"center", complex_json(c.center)}, {"radius", c.radius}};
}

Json to_json(const criteria::Classification& c) {
  Json j = {{"verdict", std::string(to_string(c.verdict))}, {"theorem", std::string(to_string(c.theorem))}};
  if (c.witness) {
    Json w = Json::array();
    for (const auto& z : c.witness->points) w.push_back(complex_json(z));
    j["witness"] = w;
    j["witness_indices"] = c.witness->indices;
    j["cross_ratio"] = complex_json(c.witness->cross_ratio);
  } else {
    j["witness"] = nullptr;
  }
  j["circle"] = c.circle ? to_json(*c.circle) : Json(nullptr);
  j["h1_lower_bound"] = c.h1_lower_bound ? Json(*c.h1_lower_bound) : Json(nullptr);
  return j;
}

Json to_json(const tube::VolumeEstimate& v) {
  return {{"mean", v.mean}, {"std_error", v.std_error}, {"samples", v.samples}, {"hits", v.hits},
          {"sigma_cut", v.sigma_cut}};
}

Json to_json(const bridge::TetraFamily& f) {
  const auto& g = f.generator;
  Json members = Json::array();
  for (std::size_t k = 0; k < f.members.size(); ++k) {
    Json verts = Json::array();
    for (const auto& v : f.members[k].vertices()) verts.push_back(ext_point_json(v));
    members.push_back({{"k", k}, {"vertices", verts}, {"volume", f.volumes[k]}});
  }
  Json discs = Json::array();
  for (std::size_t k = 0; k < f.discs.size(); ++k) {
    const auto& c = f.certificates[k];
    discs.push_back({{"k", k},
                     {"center", complex_json(f.discs[k].center)},
                     {"radius", f.discs[k].radius},
                     {"member_outside", c.member_outside},
                     {"next_inside", c.next_inside},
                     {"next_strict", c.next_strict},
                     {"nested", c.nested},
                     {"outside_margin", c.outside_margin},
                     {"inside_margin", c.inside_margin}});
  }
  Json word = Json::array();
  for (std::size_t i : f.word) word.push_back(i + 1);
  bool all = true;
  for (const auto& c : f.certificates) all = all && c.passed();
  return {{"generator",
           {{"multiplier", complex_json(g.multiplier())},
            {"translation", complex_json(g.translation())},
            {"fixed_point", complex_json(f.anchor)},
            {"word", word}}},
          {"base_volume", f.base_volume},
          {"total_volume", f.total_volume},
          {"certified", all},
          {"members", members},
          {"discs", discs}};
}

}  // namespace hullvol::report
