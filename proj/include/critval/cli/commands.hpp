#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <string_view>

#include "critval/cli/config.hpp"
#include "json.hpp"

namespace critval::cli {

inline constexpr std::string_view kReportSchema = "critval.report/1";

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidArgument = 2,  // InvalidArgument, PreconditionViolation, bad flags
  kExitDomain = 3,           // DomainError, UnsupportedLevel
  kExitInconsistency = 4,    // InconsistencyError
  kExitIo = 5,               // IoError
};

// Exit code for an exception escaping a command; std::exception otherwise
// counts as an inconsistency.
int exit_code_for(const std::exception& e);

// Rendered output of one command: a JSON report, CSV rows or an SVG document.
struct RunResult {
  std::string text;
  bool passed = true;
};

// {schema, command, timestamp, config, passed, result}; the timestamp is the
// only field that differs between runs of one config.
nlohmann::json report_envelope(const RunConfig& cfg, nlohmann::json result, bool passed);

RunResult run(const RunConfig& cfg);

// Writes to a sibling temporary file and renames it over path; IoError on failure.
void write_atomic(const std::string& path, const std::string& text);

// Parses argv, runs the command and writes its output to cfg.out or `out`;
// diagnostics go to `err`. Returns the exit code.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critval::cli
