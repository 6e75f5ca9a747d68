// Acceptance gate: runs every verification suite at full corpus and prints
// one PASS/FAIL line per criterion. Exit code 0 only when everything passes.
#include <exception>
#include <iostream>

#include "gls/suite.hpp"

int main() {
  try {
    gls::SuiteConfig cfg;
    cfg.suite = "all";
    const gls::SuiteResult result = gls::run_suite(cfg);
    const bool ok = gls::print_criteria_summary(result, std::cout);
    std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << result.records.size() << " checks)\n";
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 1;
  }
}
