// witt-descent: run scenario files, or the built-in acceptance suite.
//
//   witt-descent run remark.scn erratum-system.scn --json-out out.jsonl
//   witt-descent selftest --filter quadforms
//
// Exit codes: 0 decided, 1 input error, 2 undecided (or a failed selftest).

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "witt/report.hpp"

namespace {

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::string json_out;
  unsigned jobs = 1;
  bool explain = false;
};

int combine(int a, int b) {
  if (a == 1 || b == 1) return 1;
  return std::max(a, b);
}

int run(const std::vector<std::string>& files, const Flags& f) {
  witt::RunOptions o;
  o.seed = f.seed;
  o.budget = f.budget;
  o.explain = f.explain;
  std::vector<witt::RunResult> results(files.size());
  // Each scenario is a pure function of its inputs, so workers only need to
  // claim indices; output order stays the input order.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) results[i] = witt::run_scenario_file(files[i], o);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(f.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream json;
  if (!f.json_out.empty()) {
    json.open(f.json_out, std::ios::binary);
    if (!json) {
      std::cerr << "error: cannot write " << f.json_out << "\n";
      return 1;
    }
  }
  int code = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (i) std::cout << "\n";
    (r.exit_code == 1 ? std::cerr : std::cout) << r.human;
    if (json) json << r.document.dump() << "\n";
    code = combine(code, r.exit_code);
  }
  return code;
}

int selftest(const Flags& f, const std::string& filter) {
  witt::acceptance::SuiteOptions o;
  o.seed = f.seed.value_or(1);
  o.filter = filter;
  const auto results = witt::acceptance::run_suite(o);
  if (results.empty()) {
    std::cerr << "error: no criterion matches '" << filter << "'\n";
    return 1;
  }
  nlohmann::json doc = {{"schema", "witt-descent.selftest"},
                        {"schema_version", witt::kReportSchemaVersion},
                        {"tool", {{"name", "witt-descent"}, {"version", WITT_VERSION}}},
                        {"seed", o.seed},
                        {"criteria", nlohmann::json::array()}};
  bool ok = true;
  for (const auto& r : results) {
    std::cout << witt::acceptance::format_line(r) << "\n";
    ok = ok && r.passed;
    doc["criteria"].push_back({{"id", r.id},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"limit_seconds", r.limit_seconds},
                               {"detail", r.detail}});
  }
  if (!f.json_out.empty()) std::ofstream(f.json_out) << doc.dump(2) << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic descent of forms, systems and hermitian forms across quadratic extensions"};
  app.set_version_flag("--version", std::string(WITT_VERSION));
  app.require_subcommand(1);
  Flags f;
  std::uint64_t seed = 0, budget = 0;

  auto* run_cmd = app.add_subcommand("run", "Run one or more scenario files");
  std::vector<std::string> files;
  run_cmd->add_option("files", files, "Scenario files")->required()->check(CLI::ExistingFile);
  auto* run_seed = run_cmd->add_option("--seed", seed, "Seed for randomized searches");
  auto* run_budget = run_cmd->add_option("--budget", budget, "Search budget per step");
  run_cmd->add_option("--json-out", f.json_out, "Write one JSON document per scenario (JSON lines)");
  run_cmd->add_option("--jobs", f.jobs, "Scenarios to run in parallel")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--explain", f.explain, "Add the route and intermediate invariants");

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  std::string filter;
  auto* self_seed = self_cmd->add_option("--seed", seed, "Seed for the randomized criteria");
  self_cmd->add_option("--filter", filter, "Module name, criterion number or name substring");
  self_cmd->add_option("--json-out", f.json_out, "Write the results as JSON");

  auto* print_cmd = app.add_subcommand("print", "Print a scenario file in canonical form");
  std::string print_file;
  print_cmd->add_option("file", print_file, "Scenario file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run_cmd->parsed()) {
    if (*run_seed) f.seed = seed;
    if (*run_budget) f.budget = budget;
    return run(files, f);
  }
  if (self_cmd->parsed()) {
    if (*self_seed) f.seed = seed;
    return selftest(f, filter);
  }
  try {
    std::cout << witt::print_scenario(witt::load_scenario(print_file));
  } catch (const std::exception& e) {
    std::cerr << "error: " << print_file << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
