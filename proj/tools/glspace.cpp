// glspace: command-line front end for the GLS library.
//
//   glspace <norm|tail|conjugate|op|check|sharpness|suite> [flags]
//
// Exit codes: 0 success (and aggregate pass for check/suite), 1 aggregate
// fail or runtime failure, 2 configuration error (bad flags or spec strings).
// The environment variable GLSPACE_BUDGET overrides the series truncation
// budget for every verb.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gls/duality.hpp"
#include "gls/operators.hpp"
#include "gls/psi.hpp"
#include "gls/quadrature.hpp"
#include "gls/sequence.hpp"
#include "gls/sharpness.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"
#include "gls/specparse.hpp"
#include "gls/suite.hpp"
#include "gls/trigpoly.hpp"

namespace {

using namespace gls;

// ---- formatting (same conventions as the suite emitters) -----------------

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_num(double v) {
  return std::isfinite(v) ? num(v) : "divergent";
}

std::string json_num(double v) {
  return std::isfinite(v) ? num(v) : "\"divergent\"";
}

std::string json_str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\\\"";
    else if (c == '\\') out += "\\\\";
    else out += c;
  }
  out += "\"";
  return out;
}

void apply_env_budget(BudgetOptions& budget) {
  const char* env = std::getenv("GLSPACE_BUDGET");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) {
    throw std::invalid_argument(std::string("GLSPACE_BUDGET must be a "
                                            "positive integer, got '") +
                                env + "'");
  }
  budget.series_terms = static_cast<std::int64_t>(v);
}

SeqVariant parse_variant(const std::string& name) {
  if (name == "plain") return SeqVariant::plain;
  if (name == "nu") return SeqVariant::nu;
  if (name == "beta") return SeqVariant::beta;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (plain|nu|beta)");
}

RatioOperator parse_ratio_operator(const std::string& name) {
  if (name == "identity") return RatioOperator::identity;
  if (name == "hilbert") return RatioOperator::hilbert;
  if (name == "leindlerT") return RatioOperator::leindler_T;
  if (name == "leindlerU") return RatioOperator::leindler_U;
  if (name == "ugamma") return RatioOperator::u_gamma;
  if (name == "paley") return RatioOperator::paley;
  throw std::invalid_argument(
      "unknown operator '" + name +
      "' (identity|hilbert|leindlerT|leindlerU|ugamma|paley)");
}

AsymptoticKind parse_asymptotic_kind(const std::string& name) {
  if (name == "zeta_psi") return AsymptoticKind::zeta_psi;
  if (name == "tail_power_log") return AsymptoticKind::tail_power_log;
  if (name == "gm_growth") return AsymptoticKind::gm_growth;
  if (name == "gm_hilbert") return AsymptoticKind::gm_hilbert;
  if (name == "gdelta_log") return AsymptoticKind::gdelta_log;
  if (name == "gamma_stabilization") return AsymptoticKind::gamma_stabilization;
  throw std::invalid_argument(
      "unknown asymptotic kind '" + name +
      "' (zeta_psi|tail_power_log|gm_growth|gm_hilbert|gdelta_log|"
      "gamma_stabilization)");
}

std::vector<double> parse_params(const std::string& spec) {
  if (spec.empty()) return {};
  return parse_grid(spec);
}

void write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << payload;
}

// ---- norm ----------------------------------------------------------------

struct NormArgs {
  std::string source, psi, variant = "plain";
  double gamma = 0.0, pmax = 0.0;
  bool json = false;
};

int run_norm(const NormArgs& a, BudgetOptions budget) {
  if (a.pmax > 0.0) budget.p_max = a.pmax;
  const PsiFunction psi = parse_psi(a.psi, budget);
  NormInput input;
  if (is_sequence_spec(a.source)) {
    const WeightedSequence seq = parse_sequence(a.source, budget);
    input = norm_input(seq, parse_variant(a.variant), a.gamma);
  } else {
    const FunctionSource f = parse_source(a.source, budget);
    input = norm_input(f, budget);
  }
  const NormReport rep = gls_norm(input, psi, budget);

  std::vector<std::string> errors;
  if (rep.unbounded) errors.push_back("unbounded");
  if (rep.divergent_lp) errors.push_back("divergent_lp");

  if (a.json) {
    std::string out = "{\"value\": " + json_num(rep.value) +
                      ", \"argmax_p\": " + json_num(rep.argmax_p) +
                      ", \"stability\": " + json_num(rep.stability) +
                      ", \"errors\": [";
    for (std::size_t i = 0; i < errors.size(); ++i) {
      out += (i ? ", " : "") + json_str(errors[i]);
    }
    out += "]}\n";
    std::cout << out;
  } else {
    std::cout << "value     " << csv_num(rep.value) << "\n"
              << "argmax_p  " << csv_num(rep.argmax_p) << "\n"
              << "stability " << csv_num(rep.stability) << "\n";
    if (!errors.empty()) {
      std::cout << "errors   ";
      for (const std::string& e : errors) std::cout << " " << e;
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- tail ----------------------------------------------------------------

struct TailArgs {
  std::string source, u, psi;
  bool json = false;
};

int run_tail(const TailArgs& a, const BudgetOptions& budget) {
  const std::vector<double> u_grid = parse_grid(a.u);
  const PsiFunction psi = a.psi.empty()
                              ? parse_psi("natural:" + a.source, budget)
                              : parse_psi(a.psi, budget);

  struct Row {
    double u, tail, bound;
  };
  std::vector<Row> rows;
  if (is_sequence_spec(a.source)) {
    const WeightedSequence seq = parse_sequence(a.source, budget);
    for (double u : u_grid) {
      rows.push_back(Row{u, tail_function(seq, u).value,
                         tchebychev_bound(seq, psi, u, SeqVariant::beta,
                                          budget)
                             .bound});
    }
  } else {
    const FunctionSource f = parse_source(a.source, budget);
    for (double u : u_grid) {
      rows.push_back(Row{u, tail_function(f, u).value,
                         tchebychev_bound(f, psi, u, budget).bound});
    }
  }

  if (a.json) {
    std::string out = "{\"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += (i ? ", " : "") + std::string("{\"u\": ") + json_num(rows[i].u) +
             ", \"T\": " + json_num(rows[i].tail) +
             ", \"bound\": " + json_num(rows[i].bound) + "}";
    }
    out += "]}\n";
    std::cout << out;
  } else {
    std::cout << "u,T,bound\n";
    for (const Row& r : rows) {
      std::cout << csv_num(r.u) << ',' << csv_num(r.tail) << ','
                << csv_num(r.bound) << "\n";
    }
  }
  return 0;
}

// ---- conjugate -----------------------------------------------------------

struct ConjugateArgs {
  std::string psi, u;
  bool json = false;
};

int run_conjugate(const ConjugateArgs& a, const BudgetOptions& budget) {
  const PsiFunction psi = parse_psi(a.psi, budget);
  const std::vector<double> u_grid = parse_grid(a.u);
  if (a.json) {
    std::string out = "{\"rows\": [";
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
      const double ln = log_n_from_psi(psi, u_grid[i]);
      out += (i ? ", " : "") + std::string("{\"u\": ") + json_num(u_grid[i]) +
             ", \"log_N\": " + json_num(ln) +
             ", \"N\": " + json_num(std::exp(ln)) + "}";
    }
    out += "]}\n";
    std::cout << out;
  } else {
    std::cout << "u,log_N,N\n";
    for (double u : u_grid) {
      const double ln = log_n_from_psi(psi, u);
      std::cout << csv_num(u) << ',' << csv_num(ln) << ','
                << csv_num(std::exp(ln)) << "\n";
    }
  }
  return 0;
}

// ---- op ------------------------------------------------------------------

struct OpArgs {
  std::string kind, source, at, t, p_grid;
  int M = 64;
  double gamma = 0.5;
  bool json = false;
};

void emit_rows(const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows, bool json) {
  if (json) {
    std::string out = "{\"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += (i ? ", " : "") + std::string("{");
      for (std::size_t j = 0; j < header.size(); ++j) {
        out += (j ? ", " : "") + json_str(header[j]) + ": " +
               json_num(rows[i][j]);
      }
      out += "}";
    }
    out += "]}\n";
    std::cout << out;
    return;
  }
  for (std::size_t j = 0; j < header.size(); ++j) {
    std::cout << (j ? "," : "") << header[j];
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::cout << (j ? "," : "") << csv_num(row[j]);
    }
    std::cout << "\n";
  }
}

int run_op(const OpArgs& a, const BudgetOptions& budget) {
  std::vector<std::vector<double>> rows;

  if (a.kind == "hilbert") {
    if (a.at.empty()) throw std::invalid_argument("op hilbert needs --at");
    const FunctionSource f = parse_source(a.source, budget);
    for (double x : parse_grid(a.at)) {
      const Estimate e = f.domain == Domain::torus
                             ? hilbert_periodic_pv(f, x, budget)
                             : hilbert_line(f, x, budget);
      rows.push_back({x, e.value, e.error});
    }
    emit_rows({"x", "H", "error"}, rows, a.json);
    return 0;
  }
  if (a.kind == "sM") {
    const FunctionSource f = parse_source(a.source, budget);
    if (f.domain != Domain::torus) {
      throw std::invalid_argument("op sM needs a torus source");
    }
    const TorusCoefficients c = fourier_torus(f, a.M, budget);
    if (!a.at.empty()) {
      for (double x : parse_grid(a.at)) rows.push_back({x, c.eval(x, a.M)});
      emit_rows({"x", "sM"}, rows, a.json);
    } else {
      rows.push_back({0.0, c.c0, 0.0});
      for (int k = 1; k <= c.degree(); ++k) {
        rows.push_back({static_cast<double>(k), c.a[k - 1], c.b[k - 1]});
      }
      emit_rows({"k", "a", "b"}, rows, a.json);
    }
    return 0;
  }
  if (a.kind == "F") {
    if (a.t.empty()) throw std::invalid_argument("op F needs --t");
    const FunctionSource f = parse_source(a.source, budget);
    if (f.domain != Domain::line) {
      throw std::invalid_argument("op F needs a line source");
    }
    for (double t : parse_grid(a.t)) {
      const FourierPoint p = fourier_line(f, t, budget);
      rows.push_back({t, p.re, p.im, p.modulus(), p.error,
                      p.stabilized ? 1.0 : 0.0});
    }
    emit_rows({"t", "re", "im", "modulus", "error", "stabilized"}, rows,
              a.json);
    return 0;
  }
  if (a.kind == "leindlerT" || a.kind == "leindlerU") {
    const WeightedSequence x = parse_sequence(a.source, budget);
    const WeightedSequence y = leindler_apply(
        x, a.kind == "leindlerT" ? LeindlerOp::T : LeindlerOp::U);
    const std::vector<double> ps =
        a.p_grid.empty() ? std::vector<double>{1.25, 1.5, 2.0, 3.0, 4.0, 8.0}
                         : parse_grid(a.p_grid);
    for (double p : ps) {
      const double lhs = lp_sequence(y, p, SeqVariant::beta).value;
      const double rhs = p * lp_sequence(x, p, SeqVariant::beta).value;
      rows.push_back({p, lhs, rhs, lhs / rhs});
    }
    emit_rows({"p", "lhs", "rhs", "ratio"}, rows, a.json);
    return 0;
  }
  if (a.kind == "ugamma") {
    if (is_sequence_spec(a.source)) {
      const WeightedSequence seq = parse_sequence(a.source, budget);
      const double p0 = 1.0 / a.gamma;
      const std::vector<double> ps =
          a.p_grid.empty()
              ? std::vector<double>{0.8 * p0, 0.9 * p0, 0.95 * p0}
              : parse_grid(a.p_grid);
      for (double p : ps) {
        rows.push_back({p, gamma_norm(seq, a.gamma, p).value});
      }
      emit_rows({"p", "norm"}, rows, a.json);
      return 0;
    }
    if (a.at.empty()) {
      throw std::invalid_argument("op ugamma on a function source needs --at");
    }
    const FunctionSource f = parse_source(a.source, budget);
    const FunctionSource g = ugamma_source(f, a.gamma);
    for (double x : parse_grid(a.at)) {
      rows.push_back({x, g.scale * g.eval(x)});
    }
    emit_rows({"x", "value"}, rows, a.json);
    return 0;
  }
  if (a.kind == "maximal") {
    if (a.at.empty()) throw std::invalid_argument("op maximal needs --at");
    const FunctionSource f = parse_source(a.source, budget);
    if (f.domain != Domain::torus) {
      throw std::invalid_argument(
          "op maximal exposes the partial-sum maximal function on torus "
          "sources");
    }
    const TorusCoefficients c = fourier_torus(f, a.M, budget);
    const MaximalResult mr = maximal_s_star(c, a.M);
    for (double x : parse_grid(a.at)) {
      rows.push_back({x, mr.fn.scale * mr.fn.eval(x)});
    }
    emit_rows({"x", "s_star"}, rows, a.json);
    return 0;
  }
  throw std::invalid_argument(
      "unknown op kind '" + a.kind +
      "' (hilbert|sM|F|leindlerT|leindlerU|ugamma|maximal)");
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string ineq, corpus = "trig", p_grid, out;
  double tol = -1.0;
  bool json = false, csv = false;
};

int run_check(const CheckArgs& a, const BudgetOptions& budget) {
  BoundCheckConfig bc;
  bc.budget = budget;
  if (a.corpus == "trig") {
    bc.corpus_limit = 0;
  } else if (a.corpus == "trig-small") {
    bc.corpus_limit = 4;
  } else {
    throw std::invalid_argument("unknown corpus '" + a.corpus +
                                "' (trig|trig-small)");
  }
  if (a.tol > 0.0) bc.tol = a.tol;
  if (!a.p_grid.empty()) bc.p_grid = parse_grid(a.p_grid);

  const BoundCheckReport rep = bound_check(parse_bound_check_kind(a.ineq), bc);

  SuiteResult res;
  res.suite = "check:" + a.ineq;
  for (const CheckRecord& r : rep.records) {
    SuiteRecord s;
    s.check_id = a.ineq + "|" + r.id;
    s.p = r.p;
    s.lhs = r.lhs;
    s.rhs = r.rhs;
    s.ratio = r.ratio;
    s.pass = r.pass;
    res.records.push_back(std::move(s));
  }
  res.aggregate_pass = rep.aggregate_pass;
  res.note = rep.note;

  SuiteConfig sc;
  sc.suite = res.suite;
  sc.budget = budget;
  sc.corpus_limit = bc.corpus_limit;
  if (a.json) {
    write_payload(emit_json(res, sc), a.out);
  } else if (a.csv) {
    write_payload(emit_csv(res), a.out);
  } else {
    int failed = 0;
    for (const SuiteRecord& r : res.records) {
      if (!r.pass) {
        ++failed;
        std::cout << "FAIL " << r.check_id << " p=" << csv_num(r.p)
                  << " lhs=" << csv_num(r.lhs) << " rhs=" << csv_num(r.rhs)
                  << " ratio=" << csv_num(r.ratio) << "\n";
      }
    }
    std::cout << "check " << a.ineq << ": "
              << (res.aggregate_pass ? "PASS" : "FAIL") << " ("
              << res.records.size() << " records, " << failed << " failed)\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
  }
  return res.aggregate_pass ? 0 : 1;
}

// ---- sharpness -----------------------------------------------------------

struct SharpnessArgs {
  std::string family, params, op = "identity", sweep, psi;
  std::string asymptotic, grid, tail_gap;
  std::string eval;
  double gamma = 0.5;
  bool json = false;
};

int run_sharpness(const SharpnessArgs& a, const BudgetOptions& budget) {
  if (!a.tail_gap.empty()) {
    const std::vector<double> bd = parse_grid(a.tail_gap);
    if (bd.size() != 2) {
      throw std::invalid_argument("--tail-gap expects 'b,Delta'");
    }
    const TailGapReport rep = weighted_tail_gap(bd[0], bd[1], {}, budget);
    if (a.json) {
      std::string out = "{\"b\": " + json_num(rep.b) +
                        ", \"Delta\": " + json_num(rep.delta) +
                        ", \"gap_slope\": " + json_num(rep.gap_slope) +
                        ", \"rows\": [";
      for (std::size_t i = 0; i < rep.u.size(); ++i) {
        out += (i ? ", " : "") + std::string("{\"u\": ") + json_num(rep.u[i]) +
               ", \"tail\": " + json_num(rep.tail[i]) +
               ", \"bound\": " + json_num(rep.bound[i]) +
               ", \"tail_ratio\": " + json_num(rep.tail_ratio[i]) +
               ", \"bound_ratio\": " + json_num(rep.bound_ratio[i]) + "}";
      }
      out += "], \"note\": " + json_str(rep.note) + "}\n";
      std::cout << out;
    } else {
      std::cout << "u,tail,bound,tail_ratio,bound_ratio\n";
      for (std::size_t i = 0; i < rep.u.size(); ++i) {
        std::cout << csv_num(rep.u[i]) << ',' << csv_num(rep.tail[i]) << ','
                  << csv_num(rep.bound[i]) << ','
                  << csv_num(rep.tail_ratio[i]) << ','
                  << csv_num(rep.bound_ratio[i]) << "\n";
      }
      std::cout << "# gap_slope " << csv_num(rep.gap_slope) << "\n";
    }
    const bool ok = !rep.empty && std::isfinite(rep.gap_slope) &&
                    rep.gap_slope >= 0.85 && rep.gap_slope <= 1.15;
    return ok ? 0 : 1;
  }

  if (!a.asymptotic.empty()) {
    const AsymptoticKind kind = parse_asymptotic_kind(a.asymptotic);
    const std::vector<double> params = parse_params(a.params);
    const std::vector<double> grid =
        a.grid.empty() ? std::vector<double>{} : parse_grid(a.grid);
    const AsymptoticReport rep = asymptotic_check(kind, params, grid, budget);
    if (a.json) {
      std::string out = std::string("{\"kind\": ") + json_str(rep.kind) +
                        ", \"in_band\": " + (rep.in_band ? "true" : "false") +
                        ", \"band\": [" + json_num(rep.band_lo) + ", " +
                        json_num(rep.band_hi) + "]" +
                        ", \"final_deviation\": " +
                        json_num(rep.final_deviation) + ", \"rows\": [";
      for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        out += (i ? ", " : "") + std::string("{\"x\": ") +
               json_num(rep.grid[i]) + ", \"ratio\": " +
               json_num(rep.ratio[i]) + "}";
      }
      out += "], \"note\": " + json_str(rep.note) + "}\n";
      std::cout << out;
    } else {
      std::cout << "x,ratio\n";
      for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        std::cout << csv_num(rep.grid[i]) << ',' << csv_num(rep.ratio[i])
                  << "\n";
      }
      std::cout << "# in_band " << (rep.in_band ? "true" : "false")
                << " band [" << csv_num(rep.band_lo) << ", "
                << csv_num(rep.band_hi) << "]\n";
    }
    return rep.in_band ? 0 : 1;
  }

  if (a.family.empty()) {
    throw std::invalid_argument(
        "sharpness needs --family (with --sweep or --eval), --asymptotic, or "
        "--tail-gap");
  }
  const std::vector<double> params = parse_params(a.params);

  if (!a.eval.empty()) {
    const double where = parse_grid(a.eval).at(0);
    const Estimate e = eval_extremal(a.family, params, where, budget);
    if (a.json) {
      std::cout << "{\"value\": " << json_num(e.value)
                << ", \"error\": " << json_num(e.error) << "}\n";
    } else {
      std::cout << "value " << csv_num(e.value) << "\nerror "
                << csv_num(e.error) << "\n";
    }
    return 0;
  }

  if (a.sweep.empty()) {
    throw std::invalid_argument("sharpness --family needs --sweep or --eval");
  }
  PsiFunction psi;
  const bool have_psi = !a.psi.empty();
  if (have_psi) psi = parse_psi(a.psi, budget);
  const RatioReport rep =
      ratio_V(a.family, params, parse_ratio_operator(a.op),
              parse_grid(a.sweep), have_psi ? &psi : nullptr, a.gamma, budget);
  if (a.json) {
    std::string out =
        "{\"functional\": " + json_str(rep.functional) +
        ", \"family\": " + json_str(rep.family) +
        ", \"predicted_limit\": " + json_num(rep.predicted_limit) +
        ", \"attained_fraction\": " + json_num(rep.attained_fraction) +
        ", \"upper_bounded\": " + (rep.upper_bounded ? "true" : "false") +
        ", \"rows\": [";
    for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
      out += (i ? ", " : "") + std::string("{\"p\": ") + json_num(rep.sweep[i]) +
             ", \"ratio\": " + json_num(rep.ratio[i]) + ", \"flagged\": " +
             (rep.flagged[i] ? "true" : "false") + "}";
    }
    out += "], \"note\": " + json_str(rep.note) + "}\n";
    std::cout << out;
  } else {
    std::cout << "p,ratio,flagged\n";
    for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
      std::cout << csv_num(rep.sweep[i]) << ',' << csv_num(rep.ratio[i])
                << ',' << (rep.flagged[i] ? "true" : "false") << "\n";
    }
    if (!rep.note.empty()) std::cout << "# " << rep.note << "\n";
  }
  bool any_ok = false;
  for (bool f : rep.flagged) any_ok = any_ok || !f;
  return any_ok ? 0 : 1;
}

// ---- suite ---------------------------------------------------------------

struct SuiteArgs {
  std::string name = "all", format = "json", out;
  int corpus_limit = 0;
  bool fault_inject = false;
};

int run_suite_cmd(const SuiteArgs& a, const BudgetOptions& budget) {
  if (a.format != "json" && a.format != "csv") {
    throw std::invalid_argument("unknown format '" + a.format +
                                "' (json|csv)");
  }
  SuiteConfig sc;
  sc.suite = a.name;
  sc.budget = budget;
  sc.corpus_limit = a.corpus_limit;
  sc.fault_injection = a.fault_inject;
  const SuiteResult res = run_suite(sc);
  write_payload(a.format == "csv" ? emit_csv(res) : emit_json(res, sc), a.out);
  print_criteria_summary(res, std::cerr);
  return res.aggregate_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "glspace: Grand Lebesgue Space norms, tails, duality, and operator "
      "bounds"};
  app.require_subcommand(1);

  NormArgs norm_args;
  auto* cmd_norm = app.add_subcommand(
      "norm", "GLS norm sup_p |f|_p / psi(p) of a source or sequence");
  cmd_norm->add_option("--source", norm_args.source, "source or seq:* spec")
      ->required();
  cmd_norm->add_option("--psi", norm_args.psi, "psi spec")->required();
  cmd_norm->add_option("--variant", norm_args.variant,
                       "sequence norm variant (plain|nu|beta)");
  cmd_norm->add_option("--gamma", norm_args.gamma,
                       "gamma for the gamma_weight variant");
  cmd_norm->add_option("--pmax", norm_args.pmax,
                       "stand-in upper bound for unbounded psi supports");
  cmd_norm->add_flag("--json", norm_args.json, "JSON output");

  TailArgs tail_args;
  auto* cmd_tail = app.add_subcommand(
      "tail", "tail function and Tchebychev-through-the-norm bound");
  cmd_tail->add_option("--source", tail_args.source, "source or seq:* spec")
      ->required();
  cmd_tail->add_option("--u", tail_args.u, "level grid")->required();
  cmd_tail->add_option("--psi", tail_args.psi,
                       "psi spec (default: natural psi of the source)");
  cmd_tail->add_flag("--json", tail_args.json, "JSON output");

  ConjugateArgs conj_args;
  auto* cmd_conj = app.add_subcommand(
      "conjugate", "Young-Fenchel Orlicz function N(u) induced by psi");
  cmd_conj->add_option("--psi", conj_args.psi, "psi spec")->required();
  cmd_conj->add_option("--u", conj_args.u, "argument grid (u >= e^2)")
      ->required();
  cmd_conj->add_flag("--json", conj_args.json, "JSON output");

  OpArgs op_args;
  auto* cmd_op = app.add_subcommand("op", "apply an operator pointwise");
  cmd_op->add_option("--kind", op_args.kind,
                     "hilbert|sM|F|leindlerT|leindlerU|ugamma|maximal")
      ->required();
  cmd_op->add_option("--source", op_args.source, "source or seq:* spec")
      ->required();
  cmd_op->add_option("--M", op_args.M, "partial-sum degree (sM, maximal)");
  cmd_op->add_option("--at", op_args.at, "evaluation grid in x");
  cmd_op->add_option("--t", op_args.t, "frequency grid (F)");
  cmd_op->add_option("--p-grid", op_args.p_grid, "p grid (sequence kinds)");
  cmd_op->add_option("--gamma", op_args.gamma, "weight exponent (ugamma)");
  cmd_op->add_flag("--json", op_args.json, "JSON output");

  CheckArgs check_args;
  auto* cmd_check =
      app.add_subcommand("check", "classical inequality check on a corpus");
  cmd_check->add_option("--ineq,--kind", check_args.ineq, "check kind")
      ->required();
  cmd_check->add_option("--corpus", check_args.corpus,
                        "corpus name (trig|trig-small)");
  cmd_check->add_option("--tol", check_args.tol, "relative tolerance");
  cmd_check->add_option("--p-grid", check_args.p_grid, "override p grid");
  cmd_check->add_option("--out", check_args.out, "write report to file");
  cmd_check->add_flag("--json", check_args.json, "JSON report");
  cmd_check->add_flag("--csv", check_args.csv, "CSV report");

  SharpnessArgs sharp_args;
  auto* cmd_sharp = app.add_subcommand(
      "sharpness", "extremal families, attainment ratios, asymptotics");
  cmd_sharp->add_option("--family", sharp_args.family, "extremal family name");
  cmd_sharp->add_option("--params", sharp_args.params,
                        "family / kind parameters (comma list)");
  cmd_sharp->add_option("--operator", sharp_args.op,
                        "identity|hilbert|leindlerT|leindlerU|ugamma|paley");
  cmd_sharp->add_option("--sweep", sharp_args.sweep, "p sweep grid");
  cmd_sharp->add_option("--psi", sharp_args.psi,
                        "psi spec for GLS-normalized ratios");
  cmd_sharp->add_option("--gamma", sharp_args.gamma,
                        "weight exponent for the ugamma operator");
  cmd_sharp->add_option("--asymptotic", sharp_args.asymptotic,
                        "asymptotic check kind");
  cmd_sharp->add_option("--grid", sharp_args.grid,
                        "override grid for --asymptotic");
  cmd_sharp->add_option("--eval", sharp_args.eval,
                        "evaluate the family at a point");
  cmd_sharp->add_option("--tail-gap", sharp_args.tail_gap,
                        "weighted tail gap: 'b,Delta'");
  cmd_sharp->add_flag("--json", sharp_args.json, "JSON output");

  SuiteArgs suite_args;
  auto* cmd_suite =
      app.add_subcommand("suite", "run a verification suite and emit a report");
  cmd_suite->add_option("--name", suite_args.name,
                        "norms|duality|operators|sharpness|all");
  cmd_suite->add_option("--format", suite_args.format, "json|csv");
  cmd_suite->add_option("--out", suite_args.out, "write report to file");
  cmd_suite->add_option("--corpus-limit", suite_args.corpus_limit,
                        "restrict corpus checks to the first k polynomials");
  cmd_suite->add_flag("--fault-inject", suite_args.fault_inject,
                      "append a synthetic failing record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    BudgetOptions budget;
    apply_env_budget(budget);
    if (cmd_norm->parsed()) return run_norm(norm_args, budget);
    if (cmd_tail->parsed()) return run_tail(tail_args, budget);
    if (cmd_conj->parsed()) return run_conjugate(conj_args, budget);
    if (cmd_op->parsed()) return run_op(op_args, budget);
    if (cmd_check->parsed()) return run_check(check_args, budget);
    if (cmd_sharp->parsed()) return run_sharpness(sharp_args, budget);
    if (cmd_suite->parsed()) return run_suite_cmd(suite_args, budget);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
