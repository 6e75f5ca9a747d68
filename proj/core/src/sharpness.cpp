#include "gls/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gls/duality.hpp"
#include "gls/operators.hpp"
#include "gls/quadrature.hpp"
#include "gls/space.hpp"
#include "gls/special.hpp"

namespace gls {

namespace {

void require_params(const std::string& name, const std::vector<double>& p,
                    std::size_t n) {
  if (p.size() != n) {
    std::ostringstream os;
    os << "extremal family '" << name << "' takes " << n << " parameter"
       << (n == 1 ? "" : "s") << ", got " << p.size();
    throw std::invalid_argument(os.str());
  }
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string param_tag(const std::string& name,
                      const std::vector<double>& params) {
  std::ostringstream os;
  os << name;
  for (std::size_t i = 0; i < params.size(); ++i)
    os << (i == 0 ? ":" : ",") << params[i];
  return os.str();
}

}  // namespace

ExtremalFamily make_extremal(const std::string& name,
                             const std::vector<double>& params,
                             const BudgetOptions& opt) {
  ExtremalFamily fam;
  fam.name = name;
  fam.params = params;
  if (name == "gdelta_sin" || name == "gdelta_cos") {
    require_params(name, params, 1);
    fam.fn = src_gdelta(params[0], name == "gdelta_sin", opt.series_terms);
    fam.asymptote_note =
        name == "gdelta_sin"
            ? "(pi/2) |log x|^Delta as x -> 0+"
            : "|log x|^{Delta+1} / (Delta+1) as x -> 0+";
  } else if (name == "fdelta") {
    require_params(name, params, 1);
    fam.fn =
        hilbert_periodic(src_gdelta(params[0], true, opt.series_terms), opt);
    fam.asymptote_note = "conjugate of the log-weighted sine series";
  } else if (name == "f0") {
    require_params(name, params, 0);
    fam.fn = src_indicator01();
    fam.asymptote_note = "H[f](x) = pi^{-1} log|x/(x-1)| on the line";
  } else if (name == "fab") {
    require_params(name, params, 2);
    if (!(params[0] > 1.0 && params[1] > params[0]))
      throw std::invalid_argument("fab requires 1 < a < b");
    fam.fn = src_fab(params[0], params[1]);
    fam.asymptote_note = "|f|_p = [b/(b-p) + a/(p-a)]^{1/p}, p in (a, b)";
  } else if (name == "gm") {
    require_params(name, params, 1);
    if (!(params[0] > 0.0)) throw std::invalid_argument("gm requires m > 0");
    fam.fn = src_gm(params[0]);
    fam.asymptote_note = "|g_m|_p grows like p^{1/m}";
  } else if (name == "powerlog") {
    require_params(name, params, 2);
    fam.is_sequence = true;
    fam.seq = seq_power_log(params[0], params[1]);
    fam.asymptote_note = "T(a, eps) ~ eps^{-L} |log eps|^{qL}";
  } else if (name == "weighted_ab") {
    require_params(name, params, 2);
    fam.is_sequence = true;
    fam.seq = seq_weighted_ab(params[0], params[1]);
    fam.asymptote_note = "weighted tail ~ u^{-b} log^Delta u";
  } else if (name == "leindler_y") {
    require_params(name, params, 2);
    fam.is_sequence = true;
    fam.seq = seq_leindler_corpus(params[0], params[1], opt.series_terms);
    fam.asymptote_note = "witness ratio -> 1 as p -> p0 = s/(1+theta)";
  } else {
    throw std::invalid_argument("unknown extremal family: " + name);
  }
  return fam;
}

Estimate eval_extremal(const std::string& name,
                       const std::vector<double>& params, double where,
                       const BudgetOptions& opt) {
  const ExtremalFamily fam = make_extremal(name, params, opt);
  Estimate e;
  if (fam.is_sequence) {
    const auto n = static_cast<std::int64_t>(std::llround(where));
    if (n < 1)
      throw std::invalid_argument("eval_extremal: sequence index n >= 1");
    e.value = fam.seq.scale * fam.seq.coeff(static_cast<double>(n));
    return e;
  }
  const bool singular_zero =
      std::find(fam.fn.singular_points.begin(), fam.fn.singular_points.end(),
                0.0) != fam.fn.singular_points.end();
  if (singular_zero && std::fabs(where) < 1e-300)
    throw std::invalid_argument(
        "eval_extremal: evaluation at the singular point x = 0 rejected");
  e.value = fam.fn.scale * fam.fn.eval(where);
  if (name == "gdelta_sin" || name == "gdelta_cos" || name == "fdelta") {
    BudgetOptions half = opt;
    half.series_terms = std::max<std::int64_t>(1000, opt.series_terms / 2);
    const ExtremalFamily coarse = make_extremal(name, params, half);
    e.error = std::fabs(e.value - coarse.fn.scale * coarse.fn.eval(where));
  }
  return e;
}

// --- ratio_V ----------------------------------------------------------------

namespace {

void run_sweep(RatioReport& rep, const std::vector<double>& sweep,
               const std::function<double(double)>& one) {
  double best = 0.0;
  bool any = false;
  for (double p : sweep) {
    double r = 0.0;
    bool bad = false;
    try {
      r = one(p);
      bad = !std::isfinite(r);
    } catch (const std::exception&) {
      bad = true;
    }
    rep.sweep.push_back(p);
    rep.ratio.push_back(bad ? kInf : r);
    rep.flagged.push_back(bad);
    if (!bad) {
      best = std::max(best, r);
      any = true;
    }
  }
  rep.attained_fraction = any ? best / rep.predicted_limit : 0.0;
}

}  // namespace

RatioReport ratio_V(const std::string& family,
                    const std::vector<double>& params, RatioOperator op,
                    const std::vector<double>& sweep, const PsiFunction* psi,
                    double gamma, const BudgetOptions& opt) {
  ExtremalFamily fam = make_extremal(family, params, opt);
  RatioReport rep;
  rep.functional = "V";
  rep.family = param_tag(family, params);

  // Denominator device: natural weight (psi == nullptr) uses |f|_p itself,
  // an explicit psi uses psi(p) * ||f||_{G psi}.
  switch (op) {
    case RatioOperator::identity: {
      rep.note = "identity operator: V = 1 by construction";
      run_sweep(rep, sweep, [](double) { return 1.0; });
      return rep;
    }

    case RatioOperator::hilbert: {
      if (fam.is_sequence || fam.fn.domain != Domain::torus)
        throw std::invalid_argument("ratio_V: hilbert needs a torus family");
      LpEvaluator ef(fam.fn, opt);
      LpEvaluator eh(hilbert_periodic(fam.fn, opt), opt);
      double gn = 1.0;
      if (psi) gn = gls_norm(norm_input(fam.fn, opt), *psi, opt).value;
      if (family == "gdelta_sin" || family == "gdelta_cos") {
        const double d = params[0];
        std::ostringstream os;
        os << "finite-Delta limit of the ratio: e^{-1} (1 + 1/Delta)^Delta = "
           << std::exp(-1.0) * std::pow(1.0 + 1.0 / d, d);
        rep.note = os.str();
      }
      run_sweep(rep, sweep, [&](double p) {
        const Estimate num = eh(p);
        const Estimate den = ef(p);
        if (!num.finite() || !den.finite())
          throw std::runtime_error("divergent sweep point");
        const double base = psi ? psi->eval(p) * gn : den.value;
        return num.value / (pichorides(p) * base);
      });
      return rep;
    }

    case RatioOperator::leindler_T:
    case RatioOperator::leindler_U: {
      if (!fam.is_sequence)
        throw std::invalid_argument("ratio_V: leindler needs a sequence");
      const WeightedSequence tx = leindler_apply(
          fam.seq, op == RatioOperator::leindler_T ? LeindlerOp::T
                                                   : LeindlerOp::U);
      double gn = 1.0;
      if (psi)
        gn = gls_norm(norm_input(fam.seq, SeqVariant::beta), *psi, opt).value;
      rep.upper_bounded =
          !sweep.empty() &&
          *std::min_element(sweep.begin(), sweep.end()) >= 1.0;
      rep.note = "witness ratio |Op x|_{p,beta} / (p |x|_{p,beta})";
      run_sweep(rep, sweep, [&](double p) {
        const Estimate num = lp_sequence(tx, p, SeqVariant::beta);
        if (!num.finite()) throw std::runtime_error("divergent");
        double base;
        if (psi) {
          base = psi->eval(p) * gn;
        } else {
          const Estimate den = lp_sequence(fam.seq, p, SeqVariant::beta);
          if (!den.finite()) throw std::runtime_error("divergent");
          base = den.value;
        }
        return num.value / (p * base);
      });
      return rep;
    }

    case RatioOperator::u_gamma: {
      if (fam.is_sequence || fam.fn.domain != Domain::torus)
        throw std::invalid_argument("ratio_V: u_gamma needs a torus family");
      if (family != "gdelta_sin" && family != "gdelta_cos")
        throw std::invalid_argument(
            "ratio_V: u_gamma pairs with the log-series families");
      const double delta = params[0];
      LpEvaluator eu(ugamma_source(fam.fn, gamma), opt);
      const WeightedSequence lambda = seq_log_lambda(delta);
      rep.upper_bounded = false;  // shape constant, prefactor unknown
      rep.note = "against the gamma-weight shape 1/(gamma^2 (p0 - p))";
      run_sweep(rep, sweep, [&](double p) {
        const Estimate num = eu(p);
        const Estimate den = gamma_norm(lambda, gamma, p);
        if (!num.finite() || !den.finite())
          throw std::runtime_error("divergent");
        const double shape =
            sharp_constant(SharpConstantKind::gamma_weight, p, gamma).value;
        return num.value / (shape * den.value);
      });
      return rep;
    }

    case RatioOperator::paley: {
      if (fam.is_sequence || fam.fn.domain != Domain::torus)
        throw std::invalid_argument("ratio_V: paley needs a torus family");
      if (family != "gdelta_sin" && family != "gdelta_cos")
        throw std::invalid_argument(
            "ratio_V: paley pairs with the log-series families");
      const double delta = params[0];
      LpEvaluator ef(fam.fn, opt);
      const WeightedSequence lambda = seq_log_lambda(delta);
      rep.note =
          "|f|_p against p (1 + sup|phi|) |c|_{p,nu}; |c(k)| = lambda(k)/2 "
          "on both frequency signs";
      run_sweep(rep, sweep, [&](double p) {
        const Estimate num = ef(p);
        const Estimate lam = lp_sequence(lambda, p, SeqVariant::nu);
        if (!num.finite() || !lam.finite())
          throw std::runtime_error("divergent");
        const double cnu = std::pow(2.0, 1.0 / p) * 0.5 * lam.value;
        return num.value / (2.0 * p * cnu);
      });
      return rep;
    }
  }
  throw std::invalid_argument("ratio_V: unknown operator");
}

double lower_bound_W(RatioOperator op, const WeightedSequence& x, double p,
                     const BudgetOptions& opt) {
  (void)opt;
  if (op != RatioOperator::leindler_T && op != RatioOperator::leindler_U)
    throw std::invalid_argument("lower_bound_W: sequence operators only");
  const WeightedSequence tx = leindler_apply(
      x, op == RatioOperator::leindler_T ? LeindlerOp::T : LeindlerOp::U);
  const Estimate num = lp_sequence(tx, p, SeqVariant::beta);
  const Estimate den = lp_sequence(x, p, SeqVariant::beta);
  if (!num.finite() || !den.finite())
    throw std::runtime_error("lower_bound_W: divergent norm at this p");
  return num.value / (p * den.value);
}

// --- asymptotic_check -------------------------------------------------------

const char* asymptotic_kind_name(AsymptoticKind kind) {
  switch (kind) {
    case AsymptoticKind::zeta_psi: return "zeta_psi";
    case AsymptoticKind::tail_power_log: return "tail_power_log";
    case AsymptoticKind::gm_growth: return "gm_growth";
    case AsymptoticKind::gm_hilbert: return "gm_hilbert";
    case AsymptoticKind::gdelta_log: return "gdelta_log";
    case AsymptoticKind::gamma_stabilization: return "gamma_stabilization";
  }
  return "unknown";
}

namespace {

void finish_normalized(AsymptoticReport& rep, double lo, double hi) {
  rep.band_lo = lo;
  rep.band_hi = hi;
  const double first = std::fabs(rep.ratio.front() - 1.0);
  const double last = std::fabs(rep.ratio.back() - 1.0);
  rep.final_deviation = last;
  rep.monotone_trend = last <= first + 1e-12;
  rep.in_band = rep.ratio.back() >= lo && rep.ratio.back() <= hi;
}

void finish_band(AsymptoticReport& rep, double spread_cap) {
  double mn = kInf, mx = 0.0;
  for (double r : rep.ratio) {
    mn = std::min(mn, r);
    mx = std::max(mx, r);
  }
  rep.band_lo = 1.0 / spread_cap;
  rep.band_hi = spread_cap;
  rep.final_deviation = mn > 0.0 ? mx / mn : kInf;
  rep.monotone_trend = true;  // band check, no limit claimed
  rep.in_band = mn > 0.0 && mx / mn < spread_cap && std::isfinite(mx);
}

}  // namespace

AsymptoticReport asymptotic_check(AsymptoticKind kind,
                                  const std::vector<double>& params,
                                  std::vector<double> grid,
                                  const BudgetOptions& opt) {
  AsymptoticReport rep;
  rep.kind = asymptotic_kind_name(kind);

  switch (kind) {
    case AsymptoticKind::zeta_psi: {
      if (params.size() != 1)
        throw std::invalid_argument("zeta_psi takes {L}");
      const double L = params[0];
      if (grid.empty())
        for (int i = 8; i >= 1; --i) grid.push_back(L + 0.25 * i);
      const WeightedSequence a = seq_power_log(L, 0.0);
      for (double p : grid) {
        const double psiL = lp_sequence(a, p).value;
        rep.ratio.push_back(psiL * std::pow((p - L) / p, 1.0 / L));
      }
      rep.grid = std::move(grid);
      rep.note = "psi_(L)(p) [(p-L)/p]^{1/L}; refinement p -> L+";
      finish_normalized(rep, 0.5, 2.0);
      return rep;
    }

    case AsymptoticKind::tail_power_log: {
      if (params.size() != 2)
        throw std::invalid_argument("tail_power_log takes {L, q}");
      const double L = params[0], q = params[1];
      if (grid.empty()) grid = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
      const WeightedSequence a = seq_power_log(L, q);
      for (double eps : grid) {
        const double T = sequence_tail_measure(a, eps).value;
        rep.ratio.push_back(T * std::pow(eps, L) /
                            std::pow(std::fabs(std::log(eps)), q * L));
      }
      rep.grid = std::move(grid);
      // Stabilization: successive quotients approach 1 (the limit constant
      // itself is L^{qL} with slowly-varying corrections).
      const std::size_t n = rep.ratio.size();
      const double fq = rep.ratio[1] / rep.ratio[0];
      const double lq = rep.ratio[n - 1] / rep.ratio[n - 2];
      rep.band_lo = 0.9;
      rep.band_hi = 1.1;
      rep.final_deviation = std::fabs(lq - 1.0);
      rep.monotone_trend = std::fabs(lq - 1.0) <= std::fabs(fq - 1.0) + 1e-12;
      rep.in_band = lq >= rep.band_lo && lq <= rep.band_hi;
      rep.note = "T(a,eps) eps^L / |log eps|^{qL}; in_band = successive "
                 "quotient within 10%";
      return rep;
    }

    case AsymptoticKind::gm_growth: {
      if (params.size() != 1)
        throw std::invalid_argument("gm_growth takes {m}");
      const double m = params[0];
      if (grid.empty())
        for (int i = 0; i <= 12; ++i) grid.push_back(2.0 + 4.0 * i);
      LpEvaluator ev(src_gm(m), opt, true);
      for (double p : grid)
        rep.ratio.push_back(ev(p).value / std::pow(p, 1.0 / m));
      rep.grid = std::move(grid);
      rep.note = "|g_m|_p / p^{1/m} over the p-grid";
      finish_band(rep, 10.0);
      return rep;
    }

    case AsymptoticKind::gm_hilbert: {
      if (params.size() != 1)
        throw std::invalid_argument("gm_hilbert takes {m}");
      const double m = params[0];
      if (grid.empty()) grid = {0.1, 0.03, 0.01, 0.003, 0.001};
      const FunctionSource g = src_gm(m);
      for (double x : grid) {
        const Estimate h = hilbert_periodic_pv(g, x, opt);
        rep.ratio.push_back(
            std::fabs(h.value) /
            std::pow(std::fabs(std::log(x / kTwoPi)), (m + 1.0) / m));
      }
      rep.grid = std::move(grid);
      rep.note = "|H[g_m](x)| / |log(x/2pi)|^{(m+1)/m}; absolute constant "
                 "unknown, band = spread";
      finish_band(rep, 10.0);
      return rep;
    }

    case AsymptoticKind::gdelta_log: {
      if (params.size() != 2)
        throw std::invalid_argument("gdelta_log takes {Delta, 1=sin|0=cos}");
      const double delta = params[0];
      const bool sine = params[1] != 0.0;
      if (grid.empty()) grid = {1e-2, 3e-3, 1e-3};
      const FunctionSource g = src_gdelta(delta, sine, opt.series_terms);
      for (double x : grid) {
        const double pred =
            sine ? 0.5 * kPi * std::pow(std::fabs(std::log(x)), delta)
                 : std::pow(std::fabs(std::log(x)), delta + 1.0) /
                       (delta + 1.0);
        rep.ratio.push_back(g.scale * g.eval(x) / pred);
      }
      rep.grid = std::move(grid);
      rep.note = sine ? "g(x) / [(pi/2) |log x|^Delta]"
                      : "g(x) / [|log x|^{Delta+1}/(Delta+1)]";
      finish_normalized(rep, 0.7, 1.3);
      return rep;
    }

    case AsymptoticKind::gamma_stabilization: {
      if (params.size() != 2)
        throw std::invalid_argument(
            "gamma_stabilization takes {gamma, Delta}");
      const double gamma = params[0], delta = params[1];
      const double p0 = 1.0 / gamma;
      if (grid.empty())
        for (double f : {0.9, 0.95, 0.98, 0.99}) grid.push_back(f * p0);
      const WeightedSequence lambda = seq_log_lambda(delta);
      const double limit = std::pow(std::tgamma(delta / gamma + 1.0), gamma);
      for (double p : grid) {
        const double norm = gamma_norm(lambda, gamma, p).value;
        rep.ratio.push_back(std::pow(1.0 - p * gamma, delta + gamma) * norm /
                            limit);
      }
      rep.grid = std::move(grid);
      rep.note = "(1 - p gamma)^{Delta+gamma} |lambda|^{(gamma)}_p / "
                 "Gamma(Delta/gamma + 1)^gamma; refinement p -> 1/gamma";
      finish_normalized(rep, 0.5, 1.5);
      return rep;
    }
  }
  throw std::invalid_argument("asymptotic_check: unknown kind");
}

// --- weighted_tail_gap ------------------------------------------------------

TailGapReport weighted_tail_gap(double b, double delta,
                                std::vector<double> u_grid,
                                const BudgetOptions& opt) {
  if (!(b > 1.0) || delta < 0.0)
    throw std::invalid_argument("weighted_tail_gap: b > 1, Delta >= 0");
  TailGapReport rep;
  rep.b = b;
  rep.delta = delta;
  if (u_grid.empty())
    for (int i = 0; i <= 8; ++i) u_grid.push_back(std::exp(2.0 + i));

  const double e1 = std::exp(1.0);
  for (double u : u_grid)
    if (u >= e1) rep.u.push_back(u);
  std::sort(rep.u.begin(), rep.u.end());
  if (rep.u.empty()) {
    rep.empty = true;
    rep.note = "range guard: all u below e";
    return rep;
  }

  const WeightedSequence a = seq_weighted_ab(b, delta);
  // Natural weight on a dense p-grid inside the admissible strip (1, b).
  std::vector<double> p_grid;
  const double lo = 1.04, hi = b - 0.01;
  for (int i = 0; i < 128; ++i)
    p_grid.push_back(lo + (hi - lo) * i / 127.0);
  auto lp = [&a](double p) { return lp_sequence(a, p, SeqVariant::beta); };
  const PsiFunction psi =
      make_natural_psi(lp, p_grid, param_tag("weighted_ab", {b, delta}));
  const NormReport norm =
      gls_norm(norm_input(a, SeqVariant::beta), psi, opt);

  std::vector<double> xs, ys;
  for (double u : rep.u) {
    const double tail = tail_function(a, u).value;
    const double bound =
        tchebychev_bound_from_norm(norm.value, psi, u, opt).bound;
    rep.tail.push_back(tail);
    rep.bound.push_back(bound);
    const double lu = std::log(u);
    rep.tail_ratio.push_back(tail * std::pow(u, b) / std::pow(lu, delta));
    rep.bound_ratio.push_back(bound * std::pow(u, b) /
                              std::pow(lu, delta + 1.0));
    if (u >= std::exp(6.0) - 1e-9 && tail > 0.0 && std::isfinite(bound)) {
      xs.push_back(std::log(lu));
      ys.push_back(std::log(bound / tail));
    }
  }
  rep.gap_slope = xs.size() >= 2 ? fit_slope(xs, ys) : 0.0;
  rep.note = "gap slope ~ 1: the norm-route bound loses one log power";
  return rep;
}

// --- entier tower -----------------------------------------------------------

std::int64_t x_ent(int k) {
  if (k < 0 || k > 3)
    throw std::domain_error(
        "x_ent: evaluation refused outside k in [0, 3] (symbolic beyond "
        "desk scale)");
  return static_cast<std::int64_t>(
      std::floor(std::exp(std::exp(static_cast<double>(k)))));
}

}  // namespace gls
