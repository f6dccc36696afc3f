#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "critval/cli/commands.hpp"
#include "critval/cli/config.hpp"
#include "critval/cli/svg.hpp"
#include "critval/errors.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "doctest.h"

using namespace critval;
using namespace critval::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "critval");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json invoke_json(std::vector<std::string> args) {
  const Invocation r = invoke(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "critval_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// x from the first and last grid columns with a filled cell.
std::pair<double, double> filled_extent(const PlotData& plot) {
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t c = 0; c < plot.columns.size(); ++c) {
    if (plot.columns[c].empty()) continue;
    const double x0 = plot.grid.x_range.lo + static_cast<double>(c) * plot.grid.dx;
    lo = std::min(lo, x0);
    hi = std::max(hi, x0 + plot.grid.dx);
  }
  return {lo, hi};
}

const PlotGrid kFigureGrid{0.01, {-3.0, 3.0}, {-3.0, 3.0}};

}  // namespace

TEST_CASE("argument parsing") {
  const char* argv[] = {"critval", "plot", "--family", "SMOOTH_G", "--level", "-0.5",
                        "--x-range", "-3,2", "--y-range=-1,1", "--value", "1,2", "--value", "3",
                        "--point", "0,7.3", "--format", "svg"};
  const ParseOutcome p = parse_args(17, argv);
  REQUIRE(p.config);
  const RunConfig& c = *p.config;
  CHECK(c.command == Command::Plot);
  CHECK(*c.family == "SMOOTH_G");
  CHECK(*c.level == -0.5);
  CHECK(c.x_range.lo == -3.0);
  CHECK(c.x_range.hi == 2.0);
  CHECK(c.y_range.lo == -1.0);
  CHECK(c.values == std::vector<double>{1, 2, 3});
  CHECK(c.points == std::vector<std::vector<double>>{{0.0, 7.3}});
  CHECK(*c.format == Format::Svg);

  CHECK_THROWS_AS(parse_range("1,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_numbers("1,x"), InvalidArgument);
  CHECK_THROWS_AS(parse_numbers("1,nan"), InvalidArgument);
  CHECK(invoke({"eval", "--bogus"}).code == kExitInvalidArgument);
  CHECK(invoke({}).code == kExitInvalidArgument);
  CHECK(invoke({"teleport"}).code == kExitInvalidArgument);
  CHECK(invoke({"eval", "--format", "png"}).code == kExitInvalidArgument);
  CHECK(invoke({"eval", "--dx", "0"}).code == kExitInvalidArgument);
  const Invocation help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--family") != std::string::npos);
}

TEST_CASE("config file defaults are overridden by flags") {
  const fs::path cfg = scratch("run.conf");
  {
    std::ofstream os(cfg);
    os << "family = SMOOTH_H\nlevel = 0.25\nx-range = -2,2\nseed = 7\n";
  }
  const std::string path = cfg.string();
  const char* argv[] = {"critval", "barcode", "--config", path.c_str(), "--level", "0.5"};
  const ParseOutcome p = parse_args(6, argv);
  REQUIRE(p.config);
  CHECK(*p.config->family == "SMOOTH_H");
  CHECK(*p.config->level == 0.5);
  CHECK(p.config->x_range.lo == -2.0);
  CHECK(p.config->seed == 7);
  CHECK(p.config->config_path == path);
  CHECK(invoke({"verify", "--config", "/nonexistent/critval.conf"}).code == kExitInvalidArgument);
}

TEST_CASE("eval command") {
  const json r = invoke_json({"eval", "--field", "SMOOTH_F", "--point", "0,7.3"});
  CHECK(r["schema"] == "critval.report/1");
  CHECK(r["result"]["values"] == json::array({0.0}));
  const json g = invoke_json({"eval", "--field", "SMOOTH_G", "--point", "1,0", "--level", "0"});
  CHECK(g["result"]["values"][0].get<double>() == -fields::kExpNeg16);
  CHECK(g["result"]["points"][0]["inSublevel"] == true);
  const Invocation csv = invoke({"eval", "--field", "BUMP", "--point", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("0.36787944117144") != std::string::npos);
  CHECK(invoke({"eval", "--field", "SMOOTH_F", "--point", "1,2,3"}).code == kExitInvalidArgument);
  CHECK(invoke({"eval", "--field", "SMOOTH_F"}).code == kExitInvalidArgument);
}

TEST_CASE("plot extents and components") {
  const PlotData g1 = rasterize(models::FamilyId::SmoothG, 1.0, kFigureGrid);
  const auto [lo, hi] = filled_extent(g1);
  const double t = fields::tau(1.0);
  CHECK(std::fabs(lo + t) <= kFigureGrid.dx);
  CHECK(std::fabs(hi - t) <= kFigureGrid.dx);
  CHECK(g1.components.size() == 1);

  const PlotData h0 = rasterize(models::FamilyId::SmoothH, 0.0, kFigureGrid);
  CHECK(h0.components.size() == 3);
  REQUIRE(h0.bulge);
  CHECK(h0.bulge->box.x0 == 0.5);
  CHECK(h0.bulge->box.x1 == 1.5);
  const std::string svg = render_svg(h0);
  CHECK(count(svg, "class=\"component\"") == 3);
  CHECK(count(svg, "class=\"bulge-marker\"") == 1);

  const PlotData empty = rasterize(models::FamilyId::SmoothG, -1.0, kFigureGrid);
  CHECK(empty.components.empty());
  CHECK(filled_extent(empty).first == INFINITY);
  CHECK(render_svg(empty).find("empty sublevel set") != std::string::npos);

  CHECK_THROWS_AS(rasterize(models::FamilyId::StackedSine, 0.0, kFigureGrid), InvalidArgument);
  CHECK_THROWS_AS(rasterize(models::FamilyId::SphereH, 1.0, kFigureGrid), UnsupportedLevel);
}

TEST_CASE("figures match the golden files within one grid cell") {
  for (const char* level : {"1", "0.01", "0"}) {
    CAPTURE(level);
    const fs::path golden = fs::path(CRITVAL_SOURCE_DIR) / "tests" / "golden" / (std::string("smooth_g_a") + level + ".svg");
    REQUIRE(fs::exists(golden));
    const std::string out = scratch(std::string("g") + level + ".svg").string();
    const Invocation r = invoke({"plot", "--family", "SMOOTH_G", "--level", level, "--x-range=-3,3",
                                 "--y-range=-3,3", "--dx", "0.01", "--out", out});
    REQUIRE(r.code == 0);
    CHECK_FALSE(fs::exists(out + ".tmp"));
    const std::string produced = read_file(out);
    const std::string expected = read_file(golden);
    const std::vector<double> a = path_numbers(produced);
    const std::vector<double> b = path_numbers(expected);
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
    CHECK(worst <= 0.01);
    CHECK(count(produced, "class=\"component\"") == count(expected, "class=\"component\""));
    if (std::string(level) == "0") {
      CHECK(count(produced, "class=\"component\"") == 3);
      CHECK(produced.find("class=\"bulge-marker\"") != std::string::npos);
    }
  }
}

TEST_CASE("verify reports the counterexample") {
  const Invocation r = invoke({"verify", "--family", "SQUEEZE"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json& fam = j["result"]["families"][0];
  bool violation = false;
  for (const json& v : fam["cvlViolations"])
    if (v["x"] == -0.5 && v["y"] == 0.0 && v["degree"] == 0 && v["verdict"] == "VIOLATION") violation = true;
  CHECK(violation);
  bool pass = false;
  for (const json& s : fam["scvl"])
    if (s["x"] == -0.5 && s["y"] == 0.5 && s["degree"] == 0 && s["verdict"] == "PASS") pass = true;
  CHECK(pass);
  CHECK(fam["scvlFailures"] == 0);
  CHECK(j["result"]["theoremSuite"]["passed"] == true);
}

TEST_CASE("classify and barcode commands") {
  const json c = invoke_json({"classify", "--family", "SMOOTH_H", "--value", "0"});
  CHECK(c["result"]["reports"][0]["symmetric"] == "regular");
  CHECK(c["result"]["reports"][0]["bs"] == "critical");
  const json b = invoke_json({"barcode", "--family", "SQUEEZE", "--degree", "0"});
  const json& bars = b["result"]["barcodes"][0]["bars"];
  REQUIRE(bars.size() == 2);
  const Invocation csv = invoke({"barcode", "--family", "SMOOTH_H", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(count(csv.out, "\n") == 4);
  CHECK(invoke({"barcode"}).code == kExitInvalidArgument);
  CHECK(invoke({"classify", "--family", "SQUEEZE"}).code == kExitInvalidArgument);
}

TEST_CASE("appendix-check") {
  const json r = invoke_json({"appendix-check", "--max-order", "5"});
  CHECK(r["passed"] == true);
  REQUIRE(r["result"]["orders"].size() == 6);
  for (const json& o : r["result"]["orders"]) {
    CHECK(o["envelopeMonotone"] == true);
    if (o["order"] > 0) CHECK(o["maxRelativeError"].get<double>() <= 1e-5);
  }
  CHECK(invoke({"appendix-check", "--tolerance", "1e-30"}).code == kExitCheckFailed);
  CHECK(invoke({"appendix-check", "--max-order", "13"}).code == kExitInvalidArgument);
}

TEST_CASE("exit codes by error class") {
  CHECK(invoke({"plot", "--family", "SPHERE_H", "--level", "2"}).code == kExitDomain);
  CHECK(invoke({"plot", "--family", "SMOOTH_G", "--level", "0", "--out", "/nonexistent/dir/x.svg"}).code ==
        kExitIo);
  CHECK(exit_code_for(InconsistencyError("x")) == kExitInconsistency);
  CHECK(exit_code_for(PreconditionViolation("x")) == kExitInvalidArgument);
  CHECK(exit_code_for(UnsupportedLevel("x")) == kExitDomain);
  CHECK(exit_code_for(IoError("x")) == kExitIo);
}

TEST_CASE("reports are reproducible up to the timestamp") {
  json a = invoke_json({"verify", "--family", "SMOOTH_G", "--seed", "5"});
  json b = invoke_json({"verify", "--family", "SMOOTH_G", "--seed", "5"});
  CHECK(a.contains("timestamp"));
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
  CHECK(a["config"]["seed"] == 5);
  json c = invoke_json({"verify", "--family", "SMOOTH_G", "--seed", "6"});
  c.erase("timestamp");
  CHECK(a.dump() != c.dump());
}
