#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critval/fields/geometry.hpp"
#include "json.hpp"

namespace critval::cli {

enum class Command { Eval, Plot, Barcode, Classify, Verify, AppendixCheck };
enum class Format { Json, Csv, Svg };

std::string_view to_string(Command c);
std::string_view to_string(Format f);

// Effective settings of one run: defaults, then the config file, then flags.
struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> family;
  std::optional<std::string> field;
  std::optional<double> level;
  double dx = 0.005;
  Interval x_range{-8.0, 8.0};
  Interval y_range{-6.0, 6.0};
  double x_cut = 0.05;
  std::optional<int> degree;
  std::vector<double> values;
  std::vector<std::vector<double>> points;
  int max_order = 5;
  std::uint64_t seed = 1;
  std::string out;  // empty: standard output
  std::optional<Format> format;
  std::string config_path;
  double tolerance = 1e-5;
};

// The effective values, echoed into every report.
nlohmann::json to_json(const RunConfig& cfg);

// Result of parsing argv: a config to run, or text to print and an exit code
// (help, version, or a parse error reported with code 2).
struct ParseOutcome {
  std::optional<RunConfig> config;
  std::string message;
  int exit_code = 0;
};

// Flags: --family, --field, --level, --dx, --x-range lo,hi, --y-range lo,hi,
// --x-cut, --degree, --value (repeatable), --point c1,c2[,c3] (repeatable),
// --max-order, --seed, --tolerance, --out, --format {json,csv,svg},
// --config <path> with key = value lines named like the long flags.
ParseOutcome parse_args(int argc, const char* const* argv);

// "lo,hi" with lo < hi; InvalidArgument otherwise.
Interval parse_range(std::string_view text);
// Comma-separated finite numbers.
std::vector<double> parse_numbers(std::string_view text);

}  // namespace critval::cli
