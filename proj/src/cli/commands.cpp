#include "critval/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "critval/cli/svg.hpp"
#include "critval/errors.hpp"
#include "critval/fields/polynomial.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"
#include "critval/models/family.hpp"
#include "critval/models/serialize.hpp"
#include "critval/persistence/criticality.hpp"
#include "critval/persistence/extract.hpp"
#include "critval/persistence/lemmas.hpp"
#include "critval/persistence/random_barcode.hpp"
#include "critval/persistence/serialize.hpp"

namespace critval::cli {

namespace {

using models::FamilyId;
using models::number_to_json;
using nlohmann::json;
namespace ps = persistence;

constexpr int kDegrees[] = {0, 1};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FamilyId require_family(const RunConfig& cfg) {
  if (!cfg.family) throw InvalidArgument(std::string(to_string(cfg.command)) + ": --family is required");
  return models::parse_family(*cfg.family);
}

Format format_or(const RunConfig& cfg, Format fallback, std::initializer_list<Format> allowed) {
  const Format f = cfg.format.value_or(fallback);
  for (Format a : allowed)
    if (a == f) return f;
  throw InvalidArgument(std::string(to_string(cfg.command)) + ": format " + std::string(to_string(f)) +
                        " is not supported");
}

// All degrees of a family in one barcode.
ps::Barcode family_barcode(FamilyId f, const ps::SamplingPlan& plan) {
  ps::Barcode bc;
  bc.label = std::string(models::to_string(f));
  for (int k : kDegrees) {
    const ps::Barcode part = ps::extract_barcode(f, k, plan);
    bc.bars.insert(bc.bars.end(), part.bars.begin(), part.bars.end());
  }
  return bc;
}

ps::SamplingPlan plan_from(const RunConfig& cfg, FamilyId f) {
  ps::SamplingPlan plan;
  const double sup = models::family_info(f).level_sup;
  for (double v : cfg.values)
    if (v < sup) plan.levels.push_back(v);
  return plan;
}

RunResult run_eval(const RunConfig& cfg) {
  fields::FieldId id = fields::FieldId::Bump;
  if (cfg.field)
    id = fields::parse_field(*cfg.field);
  else if (cfg.family && models::family_info(models::parse_family(*cfg.family)).field)
    id = *models::family_info(models::parse_family(*cfg.family)).field;
  else
    throw InvalidArgument("eval: --field (or a family with a field) is required");
  if (cfg.points.empty()) throw InvalidArgument("eval: at least one --point is required");
  const bool planar = fields::arity(id) == 2 && id != fields::FieldId::Bump;
  json rows = json::array();
  std::ostringstream csv;
  csv << "point,value" << (cfg.level && planar ? ",in_sublevel" : "") << "\n";
  for (const auto& p : cfg.points) {
    const double v = fields::eval(id, p);
    json row{{"point", json::array()}, {"value", number_to_json(v)}};
    std::string coords;
    for (double c : p) {
      row["point"].push_back(number_to_json(c));
      coords += (coords.empty() ? "" : " ") + csv_number(c);
    }
    csv << '"' << coords << "\"," << csv_number(v);
    if (cfg.level && planar) {
      const bool in = fields::in_sublevel(id, {p[0], p[1]}, *cfg.level, {cfg.x_cut});
      row["inSublevel"] = in;
      csv << ',' << (in ? "true" : "false");
    }
    csv << "\n";
    rows.push_back(row);
  }
  json values = json::array();
  for (const json& r : rows) values.push_back(r["value"]);
  if (format_or(cfg, Format::Json, {Format::Json, Format::Csv}) == Format::Csv) return {csv.str(), true};
  json result{{"field", fields::to_string(id)}, {"values", values}, {"points", rows}};
  return {report_envelope(cfg, result, true).dump(2) + "\n", true};
}

RunResult run_plot(const RunConfig& cfg) {
  format_or(cfg, Format::Svg, {Format::Svg});
  const FamilyId f = require_family(cfg);
  if (!cfg.level) throw InvalidArgument("plot: --level is required");
  const PlotData plot = rasterize(f, *cfg.level, {cfg.dx, cfg.x_range, cfg.y_range});
  return {render_svg(plot), true};
}

RunResult run_barcode(const RunConfig& cfg) {
  const FamilyId f = require_family(cfg);
  const ps::SamplingPlan plan = plan_from(cfg, f);
  std::vector<ps::Barcode> codes;
  if (cfg.degree)
    codes.push_back(ps::extract_barcode(f, *cfg.degree, plan));
  else
    for (int k : kDegrees) codes.push_back(ps::extract_barcode(f, k, plan));
  if (format_or(cfg, Format::Json, {Format::Json, Format::Csv}) == Format::Csv) {
    std::ostringstream csv;
    csv << "degree,birth,death,birth_closed,death_closed\n";
    for (const ps::Barcode& bc : codes)
      for (const ps::DecoratedBar& b : bc.sorted_bars())
        csv << b.degree << ',' << csv_number(b.birth) << ',' << csv_number(b.death) << ','
            << (b.birth_closed ? "true" : "false") << ',' << (b.death_closed ? "true" : "false") << "\n";
    return {csv.str(), true};
  }
  json arr = json::array();
  for (const ps::Barcode& bc : codes) arr.push_back(ps::to_json(bc));
  json result{{"family", models::to_string(f)}, {"barcodes", arr}};
  return {report_envelope(cfg, result, true).dump(2) + "\n", true};
}

RunResult run_classify(const RunConfig& cfg) {
  format_or(cfg, Format::Json, {Format::Json});
  const FamilyId f = require_family(cfg);
  if (cfg.values.empty()) throw InvalidArgument("classify: at least one --value is required");
  const ps::Barcode bc = family_barcode(f, {});
  json reports = json::array();
  for (double v : cfg.values) reports.push_back(ps::to_json(ps::classify(bc, v)));
  json result{{"family", models::to_string(f)}, {"barcode", ps::to_json(bc)}, {"reports", reports}};
  return {report_envelope(cfg, result, true).dump(2) + "\n", true};
}

// Lemma sweep over the arrangement of one family's barcode.
json verify_family(FamilyId f, bool& passed) {
  const ps::Barcode bc = family_barcode(f, {});
  const std::vector<double> pts = ps::arrangement_points(bc);
  json violations = json::array();
  json scvl = json::array();
  int scvl_failures = 0;
  for (int k : kDegrees) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i; j < pts.size(); ++j) {
        const ps::CvlReport c = ps::check_cvl(bc, k, pts[i], pts[j]);
        if (c.violation) violations.push_back(ps::to_json(c));
        if (j == i) continue;
        const ps::ScvlReport s = ps::check_scvl(bc, k, pts[i], pts[j]);
        if (!s.holds) ++scvl_failures;
        json sj = ps::to_json(s);
        sj["verdict"] = s.holds ? "PASS" : "FAIL";
        scvl.push_back(sj);
      }
    }
  }
  for (json& v : violations) v["verdict"] = "VIOLATION";
  const bool expected = models::family_info(f).counterexample;
  const bool ok = scvl_failures == 0 && (!violations.empty()) == expected;
  passed = passed && ok;
  return {{"family", models::to_string(f)},
          {"barcode", ps::to_json(bc)},
          {"sweepPoints", [&] {
             json a = json::array();
             for (double p : pts) a.push_back(number_to_json(p));
             return a;
           }()},
          {"counterexampleExpected", expected},
          {"cvlViolations", violations},
          {"scvl", scvl},
          {"scvlFailures", scvl_failures},
          {"passed", ok}};
}

json theorem_suite(std::uint64_t seed, int barcodes, bool& passed) {
  std::mt19937_64 rng(seed);
  long scvl_checks = 0, scvl_failures = 0, deductions = 0, false_deductions = 0;
  for (int t = 0; t < barcodes; ++t) {
    const ps::Barcode bc = ps::random_barcode(rng);
    const std::vector<double> pts = ps::arrangement_points(bc);
    const std::size_t n = pts.size();
    for (int k : kDegrees) {
      std::vector<char> iso(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          iso[i * n + j] = ps::is_iso(bc, k, pts[i], pts[j]) ? 1 : 0;
          if (j == i) continue;
          ++scvl_checks;
          if (!ps::check_scvl(bc, k, pts[i], pts[j]).holds) ++scvl_failures;
        }
      for (std::size_t a = 0; a + 3 < n; ++a)
        for (std::size_t c = a + 1; c + 2 < n; ++c)
          for (std::size_t b = c + 1; b + 1 < n; ++b)
            for (std::size_t d = b + 1; d < n; ++d) {
              if (!iso[a * n + b] || !iso[c * n + d]) continue;
              ++deductions;
              if (!ps::step1_deduce(bc, k, pts[a], pts[c], pts[b], pts[d])) ++false_deductions;
            }
    }
  }
  const bool ok = scvl_failures == 0 && false_deductions == 0;
  passed = passed && ok;
  return {{"seed", seed},          {"barcodes", barcodes},       {"scvlChecks", scvl_checks},
          {"scvlFailures", scvl_failures}, {"step1Deductions", deductions}, {"step1False", false_deductions},
          {"passed", ok}};
}

RunResult run_verify(const RunConfig& cfg) {
  format_or(cfg, Format::Json, {Format::Json});
  std::vector<FamilyId> families;
  if (cfg.family)
    families.push_back(models::parse_family(*cfg.family));
  else
    families.assign(models::all_families().begin(), models::all_families().end());
  bool passed = true;
  json per = json::array();
  for (FamilyId f : families) per.push_back(verify_family(f, passed));
  json result{{"families", per}, {"theoremSuite", theorem_suite(cfg.seed, 200, passed)}};
  return {report_envelope(cfg, result, passed).dump(2) + "\n", passed};
}

// Central difference with one Richardson step, h = |x| * 1e-5.
double derivative_estimate(int n, double x) {
  const fields::PolyPair polys = fields::deriv_polys(n);
  const auto f = [&](double t) { return fields::deriv_eval(polys, t); };
  const double h = std::fabs(x) * 1e-5;
  const auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

RunResult run_appendix(const RunConfig& cfg) {
  format_or(cfg, Format::Json, {Format::Json});
  if (cfg.max_order < 0 || cfg.max_order > fields::kDefaultDerivativeBound)
    throw InvalidArgument("appendix-check: --max-order outside [0, " +
                          std::to_string(fields::kDefaultDerivativeBound) + "]");
  const std::vector<double> xs = cfg.values.empty() ? std::vector<double>{0.3, 0.5, 1.0} : cfg.values;
  for (double x : xs)
    if (x == 0.0) throw InvalidArgument("appendix-check: abscissa 0 has no finite difference");
  bool passed = true;
  json orders = json::array();
  for (int n = 0; n <= cfg.max_order; ++n) {
    json at = json::array();
    double max_rel = 0.0;
    for (double x : xs) {
      const double exact = fields::deriv_eval(n, x);
      const double ref = n == 0 ? fields::bump(std::fabs(x)) * fields::sine_curve(x) : derivative_estimate(n - 1, x);
      const double rel = std::fabs(exact - ref) / std::max(std::fabs(ref), 1e-300);
      max_rel = std::max(max_rel, rel);
      at.push_back({{"x", number_to_json(x)},
                    {"recurrence", number_to_json(exact)},
                    {n == 0 ? "direct" : "finiteDifference", number_to_json(ref)},
                    {"relativeError", number_to_json(rel)}});
    }
    const double tol = n == 0 ? 1e-14 : cfg.tolerance;
    // decay toward 0 along x = 1/m: the envelope e^{-m^2}(|P|+|Q|)(m) decreases
    const fields::PolyPair polys = fields::deriv_polys(n);
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 10; m <= 200; ++m) {
      const double t = m;
      const double log_env =
          -t * t + std::log(polys.sine_part.magnitude_bound(t) + polys.cosine_part.magnitude_bound(t) + 1e-300);
      monotone = monotone && log_env < prev;
      prev = log_env;
    }
    const double tail = std::fabs(fields::deriv_eval(n, 1.0 / 200.0));
    const bool ok = max_rel <= tol && monotone && tail < 1e-30;
    passed = passed && ok;
    orders.push_back({{"order", n},
                      {"samples", at},
                      {"maxRelativeError", number_to_json(max_rel)},
                      {"tolerance", number_to_json(tol)},
                      {"envelopeMonotone", monotone},
                      {"valueAtOneOver200", number_to_json(tail)},
                      {"passed", ok}});
  }
  json result{{"orders", orders}};
  return {report_envelope(cfg, result, passed).dump(2) + "\n", passed};
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e)) return kExitInvalidArgument;
  if (dynamic_cast<const DomainError*>(&e)) return kExitDomain;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  return kExitInconsistency;
}

json report_envelope(const RunConfig& cfg, json result, bool passed) {
  return {{"schema", kReportSchema}, {"command", to_string(cfg.command)}, {"timestamp", utc_timestamp()},
          {"config", to_json(cfg)},  {"passed", passed},                  {"result", std::move(result)}};
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Eval:
      return run_eval(cfg);
    case Command::Plot:
      return run_plot(cfg);
    case Command::Barcode:
      return run_barcode(cfg);
    case Command::Classify:
      return run_classify(cfg);
    case Command::Verify:
      return run_verify(cfg);
    case Command::AppendixCheck:
      return run_appendix(cfg);
  }
  throw InvalidArgument("unknown command");
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + tmp.string());
    os << text;
    os.flush();
    if (!os) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto " + target.string());
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const ParseOutcome parsed = parse_args(argc, argv);
    if (!parsed.config) {
      (parsed.exit_code == 0 ? out : err) << parsed.message;
      return parsed.exit_code;
    }
    const RunConfig& cfg = *parsed.config;
    const RunResult result = run(cfg);
    if (cfg.out.empty())
      out << result.text;
    else
      write_atomic(cfg.out, result.text);
    return result.passed ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "critval: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace critval::cli
