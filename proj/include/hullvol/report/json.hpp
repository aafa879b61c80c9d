#ifndef HULLVOL_REPORT_JSON_HPP
#define HULLVOL_REPORT_JSON_HPP

#include <json.hpp>

#include "hullvol/bridge/bridge.hpp"
#include "hullvol/criteria/criteria.hpp"
#include "hullvol/planar/packing.hpp"
#include "hullvol/tube/tube.hpp"

// Stable report schemas shared by the CLI and the tests. Complex numbers are [re, im];
// the point at infinity is the string "inf".

namespace hullvol::report {

using Json = nlohmann::ordered_json;

Json complex_json(planar::Complex z);
Json ext_point_json(const hyper::ExtPoint& p);

Json to_json(const planar::PackingProfile& p);
Json to_json(const planar::DimensionEstimate& d);
Json to_json(const criteria::SeriesReport& r);
Json to_json(const criteria::AuditReport& r);
/// {verdict, theorem, witness: [4 complex] | null, cross_ratio, circle, h1_lower_bound}
Json to_json(const criteria::Classification& c);
Json to_json(const planar::CircleParams& c);
Json to_json(const tube::VolumeEstimate& v);
/// Vertices, discs, per-member volumes and certificate flags.
Json to_json(const bridge::TetraFamily& f);

}  // namespace hullvol::report

#endif  // HULLVOL_REPORT_JSON_HPP
