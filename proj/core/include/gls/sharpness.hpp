#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"

namespace gls {

// --- Extremal family registry ----------------------------------------------

// The families used to probe sharpness of the norm inequalities. Function
// families realize as torus/line sources, sequence families as weighted
// sequences; `where` means the point x for the former and the index n for
// the latter.
struct ExtremalFamily {
  std::string name;
  std::vector<double> params;
  bool is_sequence = false;
  FunctionSource fn;      // when !is_sequence
  WeightedSequence seq;   // when is_sequence
  std::string asymptote_note;  // closed-form prediction, human-readable
};

// Registry names and parameters:
//   gdelta_sin {Delta}   log-weighted sine series, ~ (pi/2)|log x|^Delta
//   gdelta_cos {Delta}   cosine twin, ~ |log x|^{Delta+1}/(Delta+1)
//   fdelta     {Delta}   conjugate of gdelta_sin (structural rewrite)
//   f0         {}        line indicator of (0,1)
//   fab        {a, b}    x^{-1/b} on (0,1), x^{-1/a} on [1,inf), 1 < a < b
//   gm         {m}       |log(|x|/2pi)|^{1/m} on the torus
//   powerlog   {L, q}    a(n) = n^{-1/L} log^q n
//   weighted_ab{b, Delta} a(k) = k with beta(k) = k^{-b-1} log^Delta k
//   leindler_y {s, theta} sharpness corpus x(n) = n^{1+theta}/s,
//                         beta(n) = n^{-1-s}, truncated per budget
ExtremalFamily make_extremal(const std::string& name,
                             const std::vector<double>& params,
                             const BudgetOptions& opt = {});

// Pointwise evaluation with an error estimate for the series families
// (budget-halving residual). Evaluation at the singular point x = 0 is
// rejected for the log-singular function families.
Estimate eval_extremal(const std::string& name,
                       const std::vector<double>& params, double where,
                       const BudgetOptions& opt = {});

// --- Attainment ratios ------------------------------------------------------

enum class RatioOperator {
  identity,
  hilbert,     // function families on the torus
  leindler_T,  // sequence families
  leindler_U,
  u_gamma,     // |x|^{-gamma} multiplier against the weighted norm
  paley,       // family Lp norm against the coefficient-side bound
};

struct RatioReport {
  std::string functional;  // "V" (norm ratio) or "W0" (witness ratio)
  std::string family;
  std::vector<double> sweep;    // p values
  std::vector<double> ratio;    // per sweep point
  std::vector<bool> flagged;    // divergent / invalid points
  double predicted_limit = 1.0;
  double attained_fraction = 0.0;  // best unflagged ratio / predicted_limit
  bool upper_bounded = true;       // ratios may exceed 1 only when false
  std::string note;
};

// Per sweep point p: |Op f|_p / (C_op(p) |f|_p) with the operator's norm
// multiplier C_op (Hilbert: K_H(p); Leindler: p; weight: the gamma-shape;
// Paley: the coefficient bound). With the natural weight the denominator is
// the GLS-norm device of the lower-estimation method, so each point bounds
// the operator-norm ratio from below. An explicit psi replaces |f|_p by
// psi(p) * ||f||_{G psi}. Divergent points are flagged, the sweep continues.
RatioReport ratio_V(const std::string& family,
                    const std::vector<double>& params, RatioOperator op,
                    const std::vector<double>& sweep,
                    const PsiFunction* psi = nullptr, double gamma = 0.5,
                    const BudgetOptions& opt = {});

// W0(p) witness: |Op x|_{p,beta} / (p |x|_{p,beta}), a lower bound of the
// operator norm W(p). Only the sequence operators apply.
double lower_bound_W(RatioOperator op, const WeightedSequence& x, double p,
                     const BudgetOptions& opt = {});

// --- Asymptotic relation checks ---------------------------------------------

enum class AsymptoticKind {
  zeta_psi,             // psi_(L)(p) [(p-L)/p]^{1/L} in [0.5, 2] on (L, L+2]
  tail_power_log,       // T(a, eps) eps^L / |log eps|^{qL} stabilizes
  gm_growth,            // |g_m|_p / p^{1/m} bounded band over p in [2, 50]
  gm_hilbert,           // |H[g_m](x)| / |log(x/2pi)|^{(m+1)/m} bounded band
  gdelta_log,           // g_Delta(x) / asymptote -> 1 as x -> 0
  gamma_stabilization,  // (1-p gamma)^{Delta+gamma} |lambda|^{(gamma)}_p
                        //   -> Gamma(Delta/gamma + 1)^gamma as p -> 1/gamma
};

struct AsymptoticReport {
  std::string kind;
  std::vector<double> grid;   // refinement sequence; last = finest
  std::vector<double> ratio;  // empirical / predicted per grid point
  double final_deviation = 0.0;  // |ratio - 1| at the finest point, or the
                                 // band spread max/min for band kinds
  bool monotone_trend = true;    // finest deviation <= coarsest deviation
  bool in_band = false;
  double band_lo = 0.0, band_hi = 0.0;
  std::string note;
};

// params per kind: zeta_psi {L}; tail_power_log {L, q}; gm_growth {m};
// gm_hilbert {m}; gdelta_log {Delta, 1=sin|0=cos}; gamma_stabilization
// {gamma, Delta}. Empty grid selects a per-kind default refinement sequence.
AsymptoticReport asymptotic_check(AsymptoticKind kind,
                                  const std::vector<double>& params,
                                  std::vector<double> grid = {},
                                  const BudgetOptions& opt = {});

const char* asymptotic_kind_name(AsymptoticKind kind);

// --- Weighted tail vs Tchebychev bound --------------------------------------

struct TailGapReport {
  double b = 0.0, delta = 0.0;
  std::vector<double> u;           // filtered to u >= e
  std::vector<double> tail;        // true weighted tail at u
  std::vector<double> bound;       // Tchebychev bound through the GLS norm
  std::vector<double> tail_ratio;  // tail / [u^{-b} log^delta u]
  std::vector<double> bound_ratio; // bound / [u^{-b} log^{delta+1} u]
  double gap_slope = 0.0;  // slope of ln(bound/tail) against ln ln u over
                           // the u >= e^6 sub-grid; ~1 = one extra log power
  bool empty = false;
  std::string note;
};

// True weighted tail of the pair (a(k) = k, beta^{(delta)}) against the
// bound routed through the natural-psi GLS norm. The generic loss of one
// logarithm appears as gap_slope ~ 1.
TailGapReport weighted_tail_gap(double b, double delta,
                                std::vector<double> u_grid = {},
                                const BudgetOptions& opt = {});

// --- Entier tower -----------------------------------------------------------

// X(k) = floor(exp(exp(k))). Evaluation past k = 3 is refused (the
// construction is symbolic beyond desk scale).
std::int64_t x_ent(int k);

}  // namespace gls
