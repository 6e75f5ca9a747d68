#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gls/common.hpp"

namespace gls {

// Named verification suites bundling the library's checks into a single
// deterministic run:
//
//   norms:     tail-reconstruction agreement, psi shape bands, growth bands
//   duality:   Young-Fenchel double conjugation, slope recovery, tail gaps
//   operators: corpus operator bounds, transform identities, exact invariants
//   sharpness: sequence-operator bounds and attainment ratios
//   all:       every group above
//
// Records carry stable check ids of the form "c<criterion>|<detail>", so the
// same output can be grouped per criterion or filtered per check.

struct SuiteConfig {
  std::string suite = "all";
  BudgetOptions budget{};
  int corpus_limit = 0;          // > 0: first k corpus polynomials only
  bool fault_injection = false;  // append one synthetic failing record
};

struct SuiteRecord {
  std::string check_id;
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRecord> records;
  bool aggregate_pass = true;
  std::string note;
};

// Runs the named suite. Unknown suite names throw std::invalid_argument.
// Deterministic: identical configs produce identical results, bit for bit.
SuiteResult run_suite(const SuiteConfig& config);

// Serializers. Deterministic output: fixed key order, shortest round-trip
// number formatting, non-finite values rendered as "divergent", and no
// timestamps, so reruns are byte-identical.
std::string emit_json(const SuiteResult& result, const SuiteConfig& config);
std::string emit_csv(const SuiteResult& result);

// Prints one "criterion <n>: PASS|FAIL (<k> checks)" line per criterion
// present in the result; returns true when every printed line passes.
bool print_criteria_summary(const SuiteResult& result, std::ostream& os);

}  // namespace gls
