#pragma once

// The acceptance suite: eight criteria, each with a pinned time limit.  Used
// by the acceptance_suite test binary and by `witt-descent selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace witt::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<std::string> modules;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Empty: all criteria.  Otherwise a module name ("quadforms"), a
  /// criterion number, or a substring of a criterion name.
  std::string filter;
};

struct CriterionInfo {
  int id;
  std::string name;
  std::vector<std::string> modules;
  double limit_seconds;
};

const std::vector<CriterionInfo>& criteria();
bool matches(const CriterionInfo& c, const std::string& filter);

std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});
/// "PASS  [3] quadratic descent oracle (12.3 s / 60 s) ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace witt::acceptance
