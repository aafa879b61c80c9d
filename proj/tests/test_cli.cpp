#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = hullvol::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hullvol_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("tube writes CSV with the config and fits") {
  const Run r = run({"tube", "--seed", "3", "--samples", "20000"});
  CHECK(r.code == hullvol::cli::kExitPass);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 6);
  CHECK(lines[0].rfind("# config {", 0) == 0);
  CHECK(lines[1] == "sigma,t,estimate,std_error,samples,seed,delta,sigma_cut,r_proxy,r_measured");
  const json cfg = json::parse(lines[0].substr(9));
  CHECK(cfg["command"] == "tube");
  CHECK(cfg["seed"] == 3);
  for (int k = 2; k < 6; ++k) CHECK(std::count(lines[k].begin(), lines[k].end(), ',') == 9);
  CHECK(lines[6].rfind("# fit delta=0.5 ", 0) == 0);

  // Same config and seed: byte-identical report.
  CHECK(run({"tube", "--seed", "3", "--samples", "20000"}).out == r.out);
  CHECK(run({"tube", "--seed", "4", "--samples", "20000"}).out != r.out);
}

TEST_CASE("tube as JSON, with a delta sweep") {
  const Run r = run({"tube", "--seed", "1", "--samples", "20000", "--sweep", "--format", "json"});
  CHECK(r.code == hullvol::cli::kExitPass);
  const json j = r.doc();
  REQUIRE(j["fits"].size() == 3);
  CHECK(j["rows"].size() == 12);
  std::vector<double> cal;
  for (const auto& f : j["fits"]) {
    CHECK(f["slope_R"].get<double>() >= 1.95);
    CHECK(f["slope_R"].get<double>() <= 2.05);
    CHECK(f["ray_identity_max_dev"].get<double>() <= 1e-12);
    cal.push_back(f["calibration"].get<double>());
  }
  CHECK(cal[0] < cal[1]);
  CHECK(cal[1] < cal[2]);
  CHECK(j["pass"] == true);
}

TEST_CASE("tube config errors and band failures") {
  CHECK(run({"tube", "--seed", "1", "--sigma", "0.1"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--samples", "20000"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--seed", "1", "--sigma", "0.2,0.1,0.05,1.5"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--seed", "1", "--samples", "10"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--seed", "1", "--samples", "20000", "--v-band", "3", "4"}).code ==
        hullvol::cli::kExitCheckFailed);
  CHECK(run({"tube", "--seed", "1", "--v-band", "2.2", "1.8"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--seed", "1", "--v-band", "2.2"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"tube", "--seed", "1", "--format", "xml"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"nonsense"}).code == hullvol::cli::kExitUsage);
  CHECK(run({}).code == hullvol::cli::kExitUsage);
  CHECK(run({"--help"}).code == hullvol::cli::kExitPass);
}

TEST_CASE("classify") {
  const json c = run({"classify", "--builtin", "cantor4", "--beta", "0.5"}).doc();
  CHECK(c["classification"]["verdict"] == "InfiniteVolume");
  CHECK(c["classification"]["witness"].size() == 4);
  CHECK(c["config"]["beta"] == 0.5);

  CHECK(run({"classify", "--builtin", "segment"}).doc()["classification"]["verdict"] == "ZeroVolume");
  CHECK(run({"classify", "--builtin", "sierpinski"}).doc()["classification"]["verdict"] == "InfiniteVolume");
  CHECK(run({"classify", "--builtin", "circle"}).doc()["classification"]["verdict"] == "ZeroVolume");
  const json sq = run({"classify", "--builtin", "square-boundary"}).doc();
  CHECK(sq["classification"]["verdict"] == "InfiniteVolume");
  CHECK(sq["classification"]["h1_lower_bound"].get<double>() == doctest::Approx(std::sqrt(2.0)));

  const auto ifs = scratch("line_maps.txt");
  std::ofstream(ifs) << "# two maps on [0, 1]\nmap 0.4 0 0 0\nmap 0.4 0 0.6 0\n";
  CHECK(run({"classify", "--ifs", ifs.string()}).doc()["classification"]["verdict"] == "ZeroVolume");

  const auto csv = scratch("circle100.csv");
  {
    std::ofstream f(csv);
    f.precision(17);
    for (int k = 0; k < 100; ++k) f << std::cos(0.0628318530717958648 * k) << ',' << std::sin(0.0628318530717958648 * k) << '\n';
  }
  const Run cloud = run({"classify", "--cloud", csv.string(), "--continuum"});
  CHECK(cloud.code == 0);
  CHECK(cloud.doc()["classification"]["verdict"] == "ZeroVolume");
  CHECK(run({"classify", "--cloud", csv.string()}).code == hullvol::cli::kExitUsage);
  CHECK(run({"classify", "--ifs", "/nonexistent.txt"}).code == hullvol::cli::kExitUsage);
  CHECK(run({"classify", "--builtin", "nope"}).code == hullvol::cli::kExitUsage);
}

TEST_CASE("series") {
  const Run r = run({"series", "--builtin", "cantor4", "--beta", "0.75", "--lambda", "0.25"});
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(j["series"]["verdict"] == "Converges");
  CHECK(j["pass"] == true);
  CHECK(j["series"]["partial_sums"].size() >= 6);

  const json d = run({"series", "--builtin", "cantor4", "--beta", "0.25", "--lambda", "0.25"}).doc();
  CHECK(d["series"]["verdict"] == "Diverges");

  const json rm = run({"series", "--builtin", "remark38", "--jmax", "60"}).doc();
  CHECK(rm["series"]["verdict"] == "Converges");
  CHECK(rm["series"]["fitted_dimension"].get<double>() >= 0.9);

  CHECK(run({"series", "--builtin", "cantor4", "--lambda", "1.5"}).code == hullvol::cli::kExitUsage);
  // Too shallow for six levels.
  CHECK(run({"series", "--builtin", "cantor4", "--beta", "0.25", "--depth", "3"}).code == hullvol::cli::kExitUsage);
}

TEST_CASE("series with a tube audit") {
  const Run r = run({"series", "--builtin", "cantor4", "--beta", "0.5", "--lambda", "0.25", "--depth", "8",
                     "--audit-levels", "6", "--delta", "0.25"});
  CHECK(r.code == 0);
  CHECK(r.doc()["audit"]["levels"].size() == 6);
  const Run bad = run({"series", "--builtin", "cantor4", "--beta", "0.5", "--lambda", "0.25", "--depth", "8",
                       "--audit-levels", "6", "--delta", "4"});
  CHECK(bad.code == hullvol::cli::kExitCheckFailed);
}

TEST_CASE("bridge") {
  const Run r = run({"bridge", "--beta", "0.5", "--count", "10"});
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(j["family"]["members"].size() == 10);
  CHECK(j["family"]["certified"] == true);
  const double v = j["family"]["base_volume"].get<double>();
  for (const auto& m : j["family"]["members"]) CHECK(std::abs(m["volume"].get<double>() - v) <= 1e-9);
  CHECK(run({"bridge", "--beta", "0.5", "--count", "10"}).out == r.out);

  CHECK(run({"bridge", "--builtin", "sierpinski", "--count", "5"}).doc()["family"]["certified"] == true);
  CHECK(run({"bridge", "--builtin", "orbit", "--count", "5"}).doc()["family"]["certified"] == true);
  CHECK(run({"bridge", "--builtin", "segment"}).code == hullvol::cli::kExitCheckFailed);
  CHECK(run({"bridge", "--count", "0"}).code == hullvol::cli::kExitUsage);
}

TEST_CASE("dims") {
  const Run r = run({"dims", "--builtin", "cantor4", "--beta", "0.75", "--depth", "7"});
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(std::abs(j["estimate"]["fitted"].get<double>() - 2.0 / 3.0) <= 0.05);
  CHECK(run({"dims", "--builtin", "cantor4", "--beta", "0.75", "--depth", "7", "--tol", "1e-6"}).code ==
        hullvol::cli::kExitCheckFailed);
}

TEST_CASE("reports go to --out") {
  const auto path = scratch("bridge.json");
  std::filesystem::remove(path);
  const Run r = run({"bridge", "--beta", "0.3", "--count", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const json j = json::parse(f);
  CHECK(j["config"]["command"] == "bridge");
  CHECK(j["config"]["out"] == path.string());
  CHECK(run({"bridge", "--out", "/nonexistent/dir/x.json"}).code == hullvol::cli::kExitUsage);
}

TEST_SUITE_END();
