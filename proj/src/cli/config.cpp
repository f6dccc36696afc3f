#include "critval/cli/config.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "critval/errors.hpp"
#include "critval/models/serialize.hpp"

namespace critval::cli {

namespace {

constexpr std::array<std::string_view, 6> kCommandNames = {"eval",     "plot",   "barcode",
                                                           "classify", "verify", "appendix-check"};
constexpr std::array<std::string_view, 3> kFormatNames = {"json", "csv", "svg"};

template <std::size_t N>
std::size_t index_of(const std::array<std::string_view, N>& names, std::string_view s, const char* what) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return i;
  throw InvalidArgument(std::string("unknown ") + what + ": " + std::string(s));
}

}  // namespace

std::string_view to_string(Command c) { return kCommandNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Format f) { return kFormatNames[static_cast<std::size_t>(f)]; }

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, comma - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || !std::isfinite(v)) throw InvalidArgument("not a finite number: '" + item + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

Interval parse_range(std::string_view text) {
  const std::vector<double> v = parse_numbers(text);
  if (v.size() != 2 || !(v[0] < v[1])) throw InvalidArgument("range must be lo,hi with lo < hi: " + std::string(text));
  return {v[0], v[1]};
}

nlohmann::json to_json(const RunConfig& cfg) {
  using models::number_to_json;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : cfg.points) {
    nlohmann::json q = nlohmann::json::array();
    for (double c : p) q.push_back(number_to_json(c));
    points.push_back(q);
  }
  nlohmann::json values = nlohmann::json::array();
  for (double v : cfg.values) values.push_back(number_to_json(v));
  nlohmann::json j{{"command", to_string(cfg.command)},
                   {"dx", number_to_json(cfg.dx)},
                   {"xRange", {number_to_json(cfg.x_range.lo), number_to_json(cfg.x_range.hi)}},
                   {"yRange", {number_to_json(cfg.y_range.lo), number_to_json(cfg.y_range.hi)}},
                   {"xCut", number_to_json(cfg.x_cut)},
                   {"values", values},
                   {"points", points},
                   {"maxOrder", cfg.max_order},
                   {"seed", cfg.seed},
                   {"tolerance", number_to_json(cfg.tolerance)}};
  j["family"] = cfg.family ? nlohmann::json(*cfg.family) : nlohmann::json(nullptr);
  j["field"] = cfg.field ? nlohmann::json(*cfg.field) : nlohmann::json(nullptr);
  j["level"] = cfg.level ? number_to_json(*cfg.level) : nlohmann::json(nullptr);
  j["degree"] = cfg.degree ? nlohmann::json(*cfg.degree) : nlohmann::json(nullptr);
  j["format"] = cfg.format ? nlohmann::json(to_string(*cfg.format)) : nlohmann::json(nullptr);
  j["out"] = cfg.out;
  return j;
}

ParseOutcome parse_args(int argc, const char* const* argv) {
  CLI::App app{"Sublevel-set homology of the critical value lemma counterexamples", "critval"};
  app.set_config("--config", "", "key = value defaults, overridden by flags");
  app.get_config_ptr()->check(CLI::ExistingFile);

  std::string command, format;
  std::vector<std::string> x_range, y_range;
  std::vector<std::string> points, values;
  RunConfig cfg;
  double level = 0.0;
  int degree = 0;
  app.add_option("command", command, "eval | plot | barcode | classify | verify | appendix-check")->required();
  auto* family = app.add_option("--family", "SQUEEZE, STACKED_SINE, SIGNED_DIST, SMOOTH_F, SMOOTH_G, ...");
  auto* field = app.add_option("--field", "BUMP, SMOOTH_F, SMOOTH_G, SMOOTH_H, SIGNED_DIST, SPHERE_H");
  auto* level_opt = app.add_option("--level", level, "Sublevel value a");
  app.add_option("--dx", cfg.dx, "Grid step");
  app.add_option("--x-range", x_range, "lo,hi")->expected(1, 2);
  app.add_option("--y-range", y_range, "lo,hi")->expected(1, 2);
  app.add_option("--x-cut", cfg.x_cut, "Half-width of the symbolic strip around x = 0");
  auto* degree_opt = app.add_option("--degree", degree, "Homological degree");
  app.add_option("--value", values, "Value(s), comma separated or repeated");
  app.add_option("--point", points, "Point c1,c2[,c3] (repeatable)");
  app.add_option("--max-order", cfg.max_order, "Highest derivative order");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--tolerance", cfg.tolerance, "Relative tolerance");
  app.add_option("--out", cfg.out, "Output path (default: standard output)");
  app.add_option("--format", format, "json | csv | svg");

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    outcome.exit_code = app.exit(e, out, err);
    if (outcome.exit_code != 0) outcome.exit_code = 2;
    outcome.message = out.str() + err.str();
    return outcome;
  }

  cfg.command = static_cast<Command>(index_of(kCommandNames, command, "command"));
  if (*family) cfg.family = family->as<std::string>();
  if (*field) cfg.field = field->as<std::string>();
  if (*level_opt) cfg.level = level;
  if (*degree_opt) cfg.degree = degree;
  // config files deliver "lo,hi" as two items
  const auto joined = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const std::string& p : parts) s += (s.empty() ? "" : ",") + p;
    return s;
  };
  if (!x_range.empty()) cfg.x_range = parse_range(joined(x_range));
  if (!y_range.empty()) cfg.y_range = parse_range(joined(y_range));
  for (const std::string& v : values)
    for (double x : parse_numbers(v)) cfg.values.push_back(x);
  for (const std::string& p : points) cfg.points.push_back(parse_numbers(p));
  if (!format.empty()) cfg.format = static_cast<Format>(index_of(kFormatNames, format, "format"));
  if (auto* c = app.get_config_ptr(); *c) cfg.config_path = c->as<std::string>();
  if (!(cfg.dx > 0.0) || !std::isfinite(cfg.dx)) throw InvalidArgument("--dx must be positive");
  if (!(cfg.x_cut >= 0.0)) throw InvalidArgument("--x-cut must be non-negative");
  if (cfg.level && !std::isfinite(*cfg.level)) throw InvalidArgument("--level must be finite");
  if (cfg.degree && *cfg.degree < 0) throw InvalidArgument("--degree must be non-negative");
  if (!(cfg.tolerance > 0.0)) throw InvalidArgument("--tolerance must be positive");
  outcome.config = cfg;
  return outcome;
}

}  // namespace critval::cli
