#include "gls/suite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gls/duality.hpp"
#include "gls/operators.hpp"
#include "gls/psi.hpp"
#include "gls/quadrature.hpp"
#include "gls/sequence.hpp"
#include "gls/sharpness.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"
#include "gls/trigpoly.hpp"

namespace gls {
namespace {

// Shortest round-trip decimal form (also used for ids, so "1.25" not "1.25e0").
std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ratio_of(double lhs, double rhs) {
  if (rhs != 0.0) return lhs / rhs;
  if (lhs == 0.0) return 1.0;
  return std::numeric_limits<double>::infinity();
}

void add(std::vector<SuiteRecord>& out, std::string id, double p, double lhs,
         double rhs, bool pass) {
  SuiteRecord r;
  r.check_id = std::move(id);
  r.p = p;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = ratio_of(lhs, rhs);
  r.pass = pass;
  out.push_back(std::move(r));
}

void from_bound_check(std::vector<SuiteRecord>& out, const std::string& prefix,
                      BoundCheckKind kind, const BoundCheckConfig& cfg) {
  BoundCheckReport rep = bound_check(kind, cfg);
  for (const CheckRecord& r : rep.records) {
    SuiteRecord s;
    s.check_id = prefix + "|" + rep.kind + "|" + r.id;
    s.p = r.p;
    s.lhs = r.lhs;
    s.rhs = r.rhs;
    s.ratio = r.ratio;
    s.pass = r.pass;
    out.push_back(std::move(s));
  }
}

std::size_t corpus_size(const SuiteConfig& cfg) {
  std::size_t n = trig_corpus().size();
  if (cfg.corpus_limit > 0) {
    n = std::min<std::size_t>(n, static_cast<std::size_t>(cfg.corpus_limit));
  }
  return n;
}

double sweep_value(const RatioReport& rr) {
  if (rr.ratio.empty() || rr.flagged.empty() || rr.flagged[0]) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return rr.ratio[0];
}

// --- Criterion 1: Hilbert transform Lp bounds on the corpus ---------------

void crit1(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  BoundCheckConfig bc;
  bc.budget = cfg.budget;
  bc.corpus_limit = cfg.corpus_limit;
  from_bound_check(out, "c1", BoundCheckKind::hilbert_lp, bc);

  const auto& corpus = trig_corpus();
  const std::size_t n = corpus_size(cfg);
  for (std::size_t i = 0; i < n; ++i) {
    LpEvaluator ef(src_poly(corpus[i], "f"), cfg.budget);
    LpEvaluator eh(src_poly(conjugate(corpus[i]), "Hf"), cfg.budget);
    const double r = eh(2.0).value / ef(2.0).value;
    add(out, "c1|p2_identity|poly#" + std::to_string(i), 2.0, r, 1.0,
        std::isfinite(r) && std::abs(r - 1.0) <= 1e-10);
  }

  RatioReport rr = ratio_V("gdelta_sin", {8.0}, RatioOperator::hilbert,
                           {50.0}, nullptr, 0.5, cfg.budget);
  const double r = sweep_value(rr);
  add(out, "c1|attainment|gdelta_sin|Delta=8", 50.0, r, 0.75,
      std::isfinite(r) && r >= 0.75);
}

// --- Criterion 2: Hilbert transform between GLS spaces --------------------

void crit2(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  BoundCheckConfig bc;
  bc.budget = cfg.budget;
  bc.corpus_limit = cfg.corpus_limit;
  from_bound_check(out, "c2", BoundCheckKind::hilbert_gls, bc);
}

// --- Criterion 3: sequence operator bounds and their sharpness ------------

void crit3(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  BoundCheckConfig bc;
  bc.budget = cfg.budget;
  from_bound_check(out, "c3", BoundCheckKind::leindler_T, bc);
  from_bound_check(out, "c3", BoundCheckKind::leindler_U, bc);

  // Attainment just below the blow-up point p0 = 1 (s = 2, theta = 1). The
  // truncation length is part of the check, so it is pinned here rather than
  // taken from the configured budget.
  BudgetOptions b = cfg.budget;
  b.series_terms = 100'000;
  const std::pair<RatioOperator, const char*> ops[] = {
      {RatioOperator::leindler_T, "T"}, {RatioOperator::leindler_U, "U"}};
  for (const auto& [op, name] : ops) {
    RatioReport rr = ratio_V("leindler_y", {2.0, 1.0}, op, {0.98}, nullptr,
                             0.5, b);
    const double r = sweep_value(rr);
    add(out, std::string("c3|attainment|") + name, 0.98, r, 0.8,
        std::isfinite(r) && r >= 0.8);
  }
}

// --- Criterion 4: norm reconstruction from tails --------------------------

void crit4(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  for (double L : {1.0, 2.0}) {
    for (double q : {0.0, 1.0}) {
      const WeightedSequence seq = seq_power_log(L, q);
      const TailProfile tp = tail_profile(seq);
      const std::string base =
          "c4|tail_norm|L=" + num(L) + "|q=" + num(q);
      for (double dp : {0.5, 1.0, 2.0}) {
        const double p = L + dp;
        const Estimate nt = norm_from_tail(tp, p, cfg.budget);
        const Estimate lp = lp_sequence(seq, p);
        const double r = nt.value / lp.value;
        add(out, base, p, nt.value, lp.value,
            nt.finite() && lp.finite() && std::abs(r - 1.0) <= 0.01);
      }
    }
  }
}

// --- Criterion 5: psi shape of the power-log scale ------------------------

void crit5(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  for (double L : {1.0, 2.0, 4.0}) {
    AsymptoticReport rep =
        asymptotic_check(AsymptoticKind::zeta_psi, {L}, {}, cfg.budget);
    const std::string base = "c5|zeta_psi|L=" + num(L);
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
      const double r = rep.ratio[i];
      add(out, base, rep.grid[i], r, 2.0,
          std::isfinite(r) && r >= 0.5 && r <= 2.0);
    }
  }
}

// --- Criterion 6: log-power growth bands ----------------------------------

void crit6(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  for (double m : {1.0, 2.0}) {
    AsymptoticReport rep =
        asymptotic_check(AsymptoticKind::gm_growth, {m}, {}, cfg.budget);
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    for (double r : rep.ratio) {
      if (!std::isfinite(r)) {
        mn = std::numeric_limits<double>::quiet_NaN();
        break;
      }
      mn = std::min(mn, r);
      mx = std::max(mx, r);
    }
    const double spread = mx / mn;
    add(out, "c6|gm_growth|m=" + num(m), 0.0, spread, 10.0,
        rep.in_band && std::isfinite(spread) && spread < 10.0);
  }
}

// --- Criterion 7: Young-Fenchel duality and slope recovery ----------------

void crit7(std::vector<SuiteRecord>& out, const SuiteConfig&) {
  struct Case {
    const char* tag;
    std::function<double(double)> eval;
  };
  const Case cases[] = {
      {"z2_half", [](double z) { return 0.5 * z * z; }},
      {"zlogz", [](double z) { return z <= 0.0 ? 0.0 : z * std::log(z) - z; }},
  };
  for (const Case& c : cases) {
    ConvexProfile W;
    W.eval = c.eval;
    W.tag = c.tag;
    ConvexProfile Wstar;
    Wstar.eval = [W](double y) { return young_fenchel(W, y).value; };
    Wstar.tag = std::string(c.tag) + "*";
    for (double z : {3.0, 5.0, 8.0}) {
      const double back = young_fenchel(Wstar, z).value;
      const double want = c.eval(z);
      add(out, std::string("c7|biconjugate|") + c.tag, z, back, want,
          std::isfinite(back) &&
              std::abs(back - want) <= 1e-6 * std::max(1.0, std::abs(want)));
    }
  }

  for (double m : {1.0, 2.0}) {
    const PsiFunction psi = make_exponent_psi(1.0 / m);
    const double l4 = log_n_from_psi(psi, std::exp(4.0));
    const double l8 = log_n_from_psi(psi, std::exp(8.0));
    const double slope = (std::log(l8) - std::log(l4)) / 4.0;
    add(out, "c7|slope|m=" + num(m), 0.0, slope, m,
        std::isfinite(slope) && std::abs(slope / m - 1.0) < 0.05);
  }
}

// --- Criterion 8: line quadrature and transform identities ----------------

void crit8(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  const FunctionSource f = src_absinv();
  LpEvaluator ev(f, cfg.budget, /*use_exact=*/false);
  for (double q : {1.25, 1.5, 1.75}) {
    const double lhs = std::pow(ev(q).value, q);
    const double rhs = 2.0 / (q - 1.0);
    add(out, "c8|moment|q=" + num(q), q, lhs, rhs,
        std::isfinite(lhs) && std::abs(lhs - rhs) <= 1e-6 * rhs);
  }

  const double t = 1e-4;
  const FourierPoint F = fourier_line(f, t, cfg.budget);
  const double r = F.re / (2.0 * std::abs(std::log(t)));
  add(out, "c8|transform_lowfreq|absinv", t, r, 1.1,
      F.stabilized && std::isfinite(r) && r >= 0.9 && r <= 1.1);

  const ParsevalReport pr = parseval_line(src_gaussian(), cfg.budget);
  add(out, "c8|plancherel|gaussian", 2.0, pr.rel_gap, 1e-8,
      std::isfinite(pr.rel_gap) && pr.rel_gap <= 1e-8);
}

// --- Criterion 9: weighted tail gap slopes --------------------------------

void crit9(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  for (double delta : {0.0, 1.0}) {
    TailGapReport rep = weighted_tail_gap(3.0, delta, {}, cfg.budget);
    add(out, "c9|tail_gap|b=3|Delta=" + num(delta), 0.0, rep.gap_slope, 1.15,
        !rep.empty && std::isfinite(rep.gap_slope) && rep.gap_slope >= 0.85 &&
            rep.gap_slope <= 1.15);
  }
}

// --- Criterion 10: exact invariants (zero tolerance) ----------------------

double max_coeff_diff(const TrigPolynomial& u, const TrigPolynomial& v) {
  if (u.degree() != v.degree()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < u.a.size(); ++k) {
    worst = std::max(worst, std::abs(u.a[k] - v.a[k]));
    worst = std::max(worst, std::abs(u.b[k] - v.b[k]));
  }
  return worst;
}

void crit10(std::vector<SuiteRecord>& out, const SuiteConfig& cfg) {
  const auto& corpus = trig_corpus();
  const std::size_t n = corpus_size(cfg);

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    TrigPolynomial g = conjugate(conjugate(corpus[i]));
    TrigPolynomial neg = corpus[i];
    for (double& v : neg.a) v = -v;
    for (double& v : neg.b) v = -v;
    worst = std::max(worst, max_coeff_diff(g, neg));
  }
  add(out, "c10|conjugate_involution", 0.0, worst, 0.0, worst == 0.0);

  worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const TrigPolynomial pm = partial_sum(corpus[i], 8);
    worst = std::max(worst, max_coeff_diff(fourier_torus(corpus[i], 8).poly(), pm));
    worst = std::max(worst, max_coeff_diff(fourier_torus(pm, 8).poly(), pm));
  }
  add(out, "c10|projection_idempotent|M=8", 0.0, worst, 0.0, worst == 0.0);

  const FunctionSource s0 = src_poly(corpus[0], "poly#0");
  const double direct = LpEvaluator(s0, cfg.budget)(2.5).value;
  const double via_psi =
      gls_norm(norm_input(s0, cfg.budget), make_degenerate_psi(2.5), cfg.budget)
          .value;
  add(out, "c10|degenerate_norm|r=2.5", 2.5, via_psi, direct,
      via_psi == direct);

  const PsiFunction psi = make_exponent_psi(0.5);
  FunctionSource s2 = s0;
  s2.scale *= 2.0;
  const double n1 = gls_norm(norm_input(s0, cfg.budget), psi, cfg.budget).value;
  const double n2 = gls_norm(norm_input(s2, cfg.budget), psi, cfg.budget).value;
  add(out, "c10|homogeneity|scale=2", 0.0, n2, 2.0 * n1, n2 == 2.0 * n1);

  const double n1b = gls_norm(norm_input(s0, cfg.budget), psi, cfg.budget).value;
  const FourierPoint F1 = fourier_line(src_gaussian(), 1.0, cfg.budget);
  const FourierPoint F2 = fourier_line(src_gaussian(), 1.0, cfg.budget);
  const double drift = std::max(std::abs(n1b - n1),
                                std::max(std::abs(F1.re - F2.re),
                                         std::abs(F1.im - F2.im)));
  add(out, "c10|determinism", 0.0, drift, 0.0, drift == 0.0);
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  std::vector<int> criteria;
  if (config.suite == "norms") {
    criteria = {4, 5, 6};
  } else if (config.suite == "duality") {
    criteria = {7, 9};
  } else if (config.suite == "operators") {
    criteria = {1, 2, 8, 10};
  } else if (config.suite == "sharpness") {
    criteria = {3};
  } else if (config.suite == "all") {
    criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  } else {
    throw std::invalid_argument(
        "unknown suite '" + config.suite +
        "' (norms|duality|operators|sharpness|all)");
  }
  std::sort(criteria.begin(), criteria.end());

  SuiteResult result;
  result.suite = config.suite;
  for (int c : criteria) {
    switch (c) {
      case 1: crit1(result.records, config); break;
      case 2: crit2(result.records, config); break;
      case 3: crit3(result.records, config); break;
      case 4: crit4(result.records, config); break;
      case 5: crit5(result.records, config); break;
      case 6: crit6(result.records, config); break;
      case 7: crit7(result.records, config); break;
      case 8: crit8(result.records, config); break;
      case 9: crit9(result.records, config); break;
      case 10: crit10(result.records, config); break;
      default: break;
    }
  }

  if (config.fault_injection) {
    add(result.records, "fault|injected", 0.0, 1.0, 0.5, false);
  }

  result.aggregate_pass = true;
  for (const SuiteRecord& r : result.records) {
    result.aggregate_pass = result.aggregate_pass && r.pass;
  }
  if (result.records.empty()) {
    result.note = "warning: empty suite";
  }
  return result;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "\"divergent\"";
  return num(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_number(double v) {
  if (!std::isfinite(v)) return "divergent";
  return num(v);
}

}  // namespace

std::string emit_json(const SuiteResult& result, const SuiteConfig& config) {
  std::string out;
  out += "{\n";
  out += "  \"suite\": \"" + json_escape(result.suite) + "\",\n";
  out += "  \"budget\": {\n";
  out += "    \"series_terms\": " + std::to_string(config.budget.series_terms) +
         ",\n";
  out += "    \"quad_levels\": " + std::to_string(config.budget.quad_levels) +
         ",\n";
  out += "    \"quad_levels_log\": " +
         std::to_string(config.budget.quad_levels_log) + ",\n";
  out += "    \"quad_uniform_cells\": " +
         std::to_string(config.budget.quad_uniform_cells) + ",\n";
  out += "    \"gl_nodes\": " + std::to_string(config.budget.gl_nodes) + ",\n";
  out += "    \"p_max\": " + json_number(config.budget.p_max) + "\n";
  out += "  },\n";
  out += "  \"corpus_limit\": " + std::to_string(config.corpus_limit) + ",\n";
  out += "  \"records\": [";
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const SuiteRecord& r = result.records[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"check_id\": \"" + json_escape(r.check_id) + "\", ";
    out += "\"p\": " + json_number(r.p) + ", ";
    out += "\"lhs\": " + json_number(r.lhs) + ", ";
    out += "\"rhs\": " + json_number(r.rhs) + ", ";
    out += "\"ratio\": " + json_number(r.ratio) + ", ";
    out += std::string("\"pass\": ") + (r.pass ? "true" : "false") + "}";
  }
  out += result.records.empty() ? "],\n" : "\n  ],\n";
  out += std::string("  \"aggregate_pass\": ") +
         (result.aggregate_pass ? "true" : "false") + ",\n";
  out += "  \"note\": \"" + json_escape(result.note) + "\"\n";
  out += "}\n";
  return out;
}

std::string emit_csv(const SuiteResult& result) {
  std::string out = "check_id,p,lhs,rhs,ratio,pass\n";
  for (const SuiteRecord& r : result.records) {
    out += csv_field(r.check_id);
    out += ',';
    out += csv_number(r.p);
    out += ',';
    out += csv_number(r.lhs);
    out += ',';
    out += csv_number(r.rhs);
    out += ',';
    out += csv_number(r.ratio);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

bool print_criteria_summary(const SuiteResult& result, std::ostream& os) {
  struct Group {
    std::string prefix;
    int count = 0;
    int failed = 0;
  };
  std::vector<Group> groups;
  for (const SuiteRecord& r : result.records) {
    const std::string prefix = r.check_id.substr(0, r.check_id.find('|'));
    Group* g = nullptr;
    for (Group& known : groups) {
      if (known.prefix == prefix) {
        g = &known;
        break;
      }
    }
    if (g == nullptr) {
      groups.push_back(Group{prefix, 0, 0});
      g = &groups.back();
    }
    g->count += 1;
    if (!r.pass) g->failed += 1;
  }

  if (groups.empty()) {
    os << "no checks run\n";
    return result.aggregate_pass;
  }
  bool all_pass = true;
  for (const Group& g : groups) {
    const bool pass = g.failed == 0;
    all_pass = all_pass && pass;
    std::string label = g.prefix;
    if (label.size() >= 2 && label[0] == 'c' &&
        std::isdigit(static_cast<unsigned char>(label[1]))) {
      label = "criterion " + label.substr(1);
    }
    os << label << ": " << (pass ? "PASS" : "FAIL") << " (" << g.count
       << (g.count == 1 ? " check" : " checks");
    if (g.failed > 0) os << ", " << g.failed << " failed";
    os << ")\n";
  }
  return all_pass && result.aggregate_pass;
}

}  // namespace gls
