#include "gls/specparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "gls/quadrature.hpp"

namespace gls {
namespace {

[[noreturn]] void fail(const std::string& what, const std::string& spec) {
  throw std::invalid_argument(what + ": '" + spec + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) fail("trailing characters in number", spec);
    return v;
  } catch (const std::invalid_argument&) {
    fail("expected a number, got '" + s + "'", spec);
  } catch (const std::out_of_range&) {
    fail("number out of range: '" + s + "'", spec);
  }
}

// Parses "k1=v1,k2=v2" against a list of known keys. Each key appears at most
// once; `found` marks which were present.
struct KeyValues {
  std::vector<std::string> keys;
  std::vector<double> values;
  std::vector<bool> found;

  double get(const std::string& key, const std::string& spec) const {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) {
        if (!found[i]) fail("missing required key '" + key + "'", spec);
        return values[i];
      }
    }
    fail("internal: unknown key '" + key + "'", spec);
  }

  double get_or(const std::string& key, double fallback) const {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key && found[i]) return values[i];
    }
    return fallback;
  }
};

KeyValues parse_kv(const std::string& body, std::vector<std::string> keys,
                   const std::string& spec) {
  KeyValues kv;
  kv.keys = std::move(keys);
  kv.values.assign(kv.keys.size(), 0.0);
  kv.found.assign(kv.keys.size(), false);
  if (body.empty()) return kv;
  for (const std::string& item : split(body, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail("expected key=value, got '" + item + "'", spec);
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    bool known = false;
    for (std::size_t i = 0; i < kv.keys.size(); ++i) {
      if (kv.keys[i] == key) {
        if (kv.found[i]) fail("duplicate key '" + key + "'", spec);
        kv.values[i] = to_double(val, spec);
        kv.found[i] = true;
        known = true;
        break;
      }
    }
    if (!known) fail("unknown key '" + key + "'", spec);
  }
  return kv;
}

std::vector<double> numbers(const std::string& body, std::size_t expect,
                            const std::string& spec) {
  std::vector<std::string> parts = split(body, ',');
  if (parts.size() != expect) {
    fail("expected " + std::to_string(expect) + " comma-separated numbers",
         spec);
  }
  std::vector<double> out;
  out.reserve(parts.size());
  for (const std::string& part : parts) out.push_back(to_double(part, spec));
  return out;
}

WeightedSequence load_custom_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string& cell : split(line, ',')) {
      // Trim surrounding whitespace; skip blank cells and comment lines.
      auto lo = cell.find_first_not_of(" \t\r");
      if (lo == std::string::npos) continue;
      auto hi = cell.find_last_not_of(" \t\r");
      cell = cell.substr(lo, hi - lo + 1);
      if (cell.empty() || cell[0] == '#') break;
      values.push_back(to_double(cell, path));
    }
  }
  if (values.empty()) {
    throw std::invalid_argument("sequence file has no values: " + path);
  }
  return seq_dense(values, "custom:" + path);
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  if (spec.empty()) fail("empty grid spec", spec);
  std::vector<double> out;
  if (spec.rfind("lin:", 0) == 0 || spec.rfind("log:", 0) == 0) {
    bool logspace = spec[1] == 'o';
    std::vector<double> v = numbers(spec.substr(4), 3, spec);
    double lo = v[0];
    double hi = v[1];
    double nd = v[2];
    if (!(nd >= 1.0) || nd != std::floor(nd) || nd > 1e7) {
      fail("grid count must be a positive integer", spec);
    }
    auto n = static_cast<std::size_t>(nd);
    if (logspace && !(lo > 0.0 && hi > 0.0)) {
      fail("log grid endpoints must be positive", spec);
    }
    if (n == 1) {
      out.push_back(lo);
      return out;
    }
    double la = logspace ? std::log(lo) : lo;
    double lb = logspace ? std::log(hi) : hi;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      double t = la + (lb - la) * static_cast<double>(i) /
                          static_cast<double>(n - 1);
      out.push_back(logspace ? std::exp(t) : t);
    }
    return out;
  }
  for (const std::string& part : split(spec, ',')) {
    out.push_back(to_double(part, spec));
  }
  return out;
}

FunctionSource parse_source(const std::string& spec, const BudgetOptions& opt) {
  std::vector<std::string> parts = split(spec, ':');
  if (parts.size() < 2) fail("source spec needs a domain prefix", spec);
  const std::string& domain = parts[0];
  const std::string& name = parts[1];
  std::string body = parts.size() > 2 ? parts[2] : std::string();
  if (parts.size() > 3) fail("too many ':' sections in source spec", spec);

  if (domain == "torus") {
    if (name == "const1") return src_const1();
    if (name == "cosx") return src_cosx();
    if (name == "gdelta_sin" || name == "gdelta_cos") {
      KeyValues kv = parse_kv(body, {"Delta", "terms"}, spec);
      double delta = kv.get("Delta", spec);
      auto terms = static_cast<std::int64_t>(
          kv.get_or("terms", static_cast<double>(opt.series_terms)));
      return src_gdelta(delta, name == "gdelta_sin", terms);
    }
    if (name == "gm") {
      KeyValues kv = parse_kv(body, {"m"}, spec);
      return src_gm(kv.get("m", spec));
    }
    fail("unknown torus source (const1|cosx|gdelta_sin|gdelta_cos|gm)", spec);
  }
  if (domain == "line") {
    if (name == "indicator01") return src_indicator01();
    if (name == "absinv") return src_absinv();
    if (name == "gaussian") return src_gaussian();
    if (name == "fab") {
      KeyValues kv = parse_kv(body, {"a", "b"}, spec);
      return src_fab(kv.get("a", spec), kv.get("b", spec));
    }
    fail("unknown line source (indicator01|absinv|gaussian|fab)", spec);
  }
  fail("source domain must be 'torus' or 'line'", spec);
}

WeightedSequence parse_sequence(const std::string& spec,
                                const BudgetOptions& opt) {
  if (!is_sequence_spec(spec)) fail("sequence spec must start with 'seq:'", spec);
  std::string rest = spec.substr(4);
  auto cut = rest.find(':');
  std::string name = rest.substr(0, cut);
  std::string body = cut == std::string::npos ? std::string() : rest.substr(cut + 1);

  if (name == "power_log") {
    KeyValues kv = parse_kv(body, {"L", "q"}, spec);
    return seq_power_log(kv.get("L", spec), kv.get("q", spec));
  }
  if (name == "harmonic") {
    if (!body.empty()) fail("seq:harmonic takes no parameters", spec);
    return seq_harmonic();
  }
  if (name == "unit") {
    KeyValues kv = parse_kv(body, {"k"}, spec);
    double k = kv.get_or("k", 1.0);
    if (!(k >= 1.0) || k != std::floor(k)) fail("k must be a positive integer", spec);
    return seq_unit(static_cast<int>(k));
  }
  if (name == "leindler") {
    KeyValues kv = parse_kv(body, {"s", "theta", "n"}, spec);
    auto n = static_cast<std::int64_t>(
        kv.get_or("n", static_cast<double>(opt.series_terms)));
    return seq_leindler_corpus(kv.get("s", spec), kv.get("theta", spec), n);
  }
  if (name == "weighted_ab") {
    KeyValues kv = parse_kv(body, {"b", "Delta"}, spec);
    return seq_weighted_ab(kv.get("b", spec), kv.get("Delta", spec));
  }
  if (name == "log_lambda") {
    KeyValues kv = parse_kv(body, {"Delta"}, spec);
    return seq_log_lambda(kv.get("Delta", spec));
  }
  if (name == "custom") {
    if (body.empty()) fail("seq:custom needs a file path", spec);
    return load_custom_sequence(body);
  }
  fail("unknown sequence family "
       "(power_log|harmonic|unit|leindler|weighted_ab|log_lambda|custom)",
       spec);
}

PsiFunction parse_psi(const std::string& spec, const BudgetOptions& opt) {
  auto cut = spec.find(':');
  std::string name = spec.substr(0, cut);
  std::string body = cut == std::string::npos ? std::string() : spec.substr(cut + 1);

  if (name == "power") {
    std::vector<double> v = numbers(body, 4, spec);
    return make_power_psi(v[0], v[1], v[2], v[3]);
  }
  if (name == "exp") {
    std::vector<double> v = numbers(body, 1, spec);
    return make_exponent_psi(v[0]);
  }
  if (name == "degenerate") {
    std::vector<double> v = numbers(body, 1, spec);
    return make_degenerate_psi(v[0]);
  }
  if (name == "gab") {
    std::vector<double> v = numbers(body, 4, spec);
    return make_gab_psi(v[0], v[1], v[2], v[3]);
  }
  if (name == "natural") {
    if (body.empty()) fail("natural psi needs an inner source/sequence spec", spec);
    std::function<Estimate(double)> lp;
    std::string tag;
    if (is_sequence_spec(body)) {
      WeightedSequence seq = parse_sequence(body, opt);
      tag = seq.family_tag;
      lp = [seq](double p) { return lp_sequence(seq, p, SeqVariant::beta); };
    } else {
      FunctionSource f = parse_source(body, opt);
      tag = f.tag;
      auto eval = std::make_shared<LpEvaluator>(f, opt);
      lp = [eval](double p) { return (*eval)(p); };
    }
    // Default grid; drop nodes where the norm is not finite so the chord
    // construction only sees usable data.
    std::vector<double> grid;
    for (int i = 0; i < 33; ++i) {
      grid.push_back(1.05 + (8.0 - 1.05) * i / 32.0);
    }
    std::vector<double> usable;
    for (double p : grid) {
      Estimate e = lp(p);
      if (e.finite() && e.value > 0.0) usable.push_back(p);
    }
    if (usable.size() < 2) {
      fail("natural psi: norm not finite on the default grid", spec);
    }
    return make_natural_psi(lp, usable, tag);
  }
  fail("unknown psi family (power|exp|degenerate|gab|natural)", spec);
}

BoundCheckKind parse_bound_check_kind(const std::string& name) {
  static const std::pair<const char*, BoundCheckKind> table[] = {
      {"hilbert_lp", BoundCheckKind::hilbert_lp},
      {"hilbert_gls", BoundCheckKind::hilbert_gls},
      {"riesz_sM", BoundCheckKind::riesz_sM},
      {"maximal_s_shape", BoundCheckKind::maximal_s_shape},
      {"paley", BoundCheckKind::paley},
      {"hy_discrete", BoundCheckKind::hy_discrete},
      {"hy_line", BoundCheckKind::hy_line},
      {"leindler_T", BoundCheckKind::leindler_T},
      {"leindler_U", BoundCheckKind::leindler_U},
      {"theorem_gamma", BoundCheckKind::theorem_gamma},
  };
  for (const auto& [key, kind] : table) {
    if (name == key) return kind;
  }
  throw std::invalid_argument(
      "unknown check kind '" + name +
      "' (hilbert_lp|hilbert_gls|riesz_sM|maximal_s_shape|paley|hy_discrete|"
      "hy_line|leindler_T|leindler_U|theorem_gamma)");
}

}  // namespace gls
