#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gls/suite.hpp"

using namespace gls;

namespace {

SuiteConfig quick(const std::string& name) {
  SuiteConfig cfg;
  cfg.suite = name;
  cfg.corpus_limit = 2;
  return cfg;
}

bool has_prefix(const SuiteResult& r, const std::string& prefix) {
  return std::any_of(r.records.begin(), r.records.end(),
                     [&](const SuiteRecord& rec) {
                       return rec.check_id.rfind(prefix, 0) == 0;
                     });
}

}  // namespace

TEST_CASE("norms suite passes and stays in its groups") {
  const SuiteResult r = run_suite(quick("norms"));
  CHECK(r.aggregate_pass);
  CHECK_FALSE(r.records.empty());
  CHECK(has_prefix(r, "c4|"));
  CHECK(has_prefix(r, "c5|"));
  CHECK(has_prefix(r, "c6|"));
  CHECK_FALSE(has_prefix(r, "c1|"));
  for (const SuiteRecord& rec : r.records) {
    CAPTURE(rec.check_id);
    CHECK(rec.pass);
    CHECK(rec.check_id.find(',') == std::string::npos);  // CSV-safe ids
  }
}

TEST_CASE("duality suite passes") {
  const SuiteResult r = run_suite(quick("duality"));
  CHECK(r.aggregate_pass);
  CHECK(has_prefix(r, "c7|"));
  CHECK(has_prefix(r, "c9|"));
}

TEST_CASE("unknown suite name is rejected") {
  SuiteConfig cfg;
  cfg.suite = "bogus";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("emission is deterministic") {
  const SuiteConfig cfg = quick("norms");
  const SuiteResult r1 = run_suite(cfg);
  const SuiteResult r2 = run_suite(cfg);
  CHECK(emit_json(r1, cfg) == emit_json(r2, cfg));
  CHECK(emit_csv(r1) == emit_csv(r2));
}

TEST_CASE("csv layout") {
  const SuiteConfig cfg = quick("norms");
  const SuiteResult r = run_suite(cfg);
  const std::string csv = emit_csv(r);
  CHECK(csv.rfind("check_id,p,lhs,rhs,ratio,pass\n", 0) == 0);
  // one header plus one line per record
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == static_cast<long>(r.records.size()) + 1);
}

TEST_CASE("json layout") {
  const SuiteConfig cfg = quick("norms");
  const SuiteResult r = run_suite(cfg);
  const std::string js = emit_json(r, cfg);
  CHECK(js.find("\"suite\": \"norms\"") != std::string::npos);
  CHECK(js.find("\"aggregate_pass\": true") != std::string::npos);
  CHECK(js.find("\"records\"") != std::string::npos);
  CHECK(js.find("\"budget\"") != std::string::npos);
  CHECK(js.find("timestamp") == std::string::npos);
}

TEST_CASE("fault injection trips the aggregate") {
  SuiteConfig cfg = quick("norms");
  cfg.fault_injection = true;
  const SuiteResult r = run_suite(cfg);
  CHECK_FALSE(r.aggregate_pass);
  CHECK(has_prefix(r, "fault|injected"));

  std::ostringstream os;
  CHECK_FALSE(print_criteria_summary(r, os));
  CHECK(os.str().find("FAIL") != std::string::npos);
}

TEST_CASE("criteria summary lines") {
  const SuiteResult r = run_suite(quick("norms"));
  std::ostringstream os;
  CHECK(print_criteria_summary(r, os));
  const std::string text = os.str();
  CHECK(text.find("criterion 4: PASS") != std::string::npos);
  CHECK(text.find("criterion 5: PASS") != std::string::npos);
  CHECK(text.find("criterion 6: PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}
