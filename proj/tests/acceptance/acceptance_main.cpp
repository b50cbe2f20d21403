// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance_suite [filter] [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  witt::acceptance::SuiteOptions o;
  if (argc > 1) o.filter = argv[1];
  if (argc > 2) o.seed = std::strtoull(argv[2], nullptr, 10);
  bool ok = true;
  for (const auto& r : witt::acceptance::run_suite(o)) {
    std::cout << witt::acceptance::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
