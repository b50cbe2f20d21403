#pragma once

// Running a scenario and rendering its report.  The machine-readable report
// is one JSON document per scenario; apart from the "timing" member it is a
// pure function of (scenario, seed, budget, explain).

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "witt/decision.hpp"
#include "witt/scenario.hpp"

namespace witt {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kReportSchema = "witt-descent.report";

struct RunOptions {
  std::optional<std::uint64_t> seed;    // overrides the scenario's seed
  std::optional<std::uint64_t> budget;  // overrides the scenario's budget
  bool explain = false;
};

struct RunResult {
  Decision decision = Decision::undecided;
  int exit_code = 2;  // 0 decided, 1 input error, 2 undecided
  nlohmann::json document;
  std::string human;
};

/// Never throws for bad input: semantic errors produce exit code 1 and an
/// error document.
RunResult run_scenario(const Scenario& s, const RunOptions& options = {}, const std::string& source = "");
/// Parse then run; parse errors carry line and column.
RunResult run_scenario_text(const std::string& text, const RunOptions& options = {}, const std::string& source = "");
RunResult run_scenario_file(const std::string& path, const RunOptions& options = {});

RunResult input_error(const std::string& source, const std::string& message);

/// The document without its timing member, for determinism checks.
nlohmann::json strip_timing(nlohmann::json document);

}  // namespace witt
