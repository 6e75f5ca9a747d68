#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/psi.hpp"

namespace gls {

// Input to the sup-over-p engine: |f|_p of the UNSCALED source plus the
// structural scale factor. Keeping the scale out of the closure makes
// absolute homogeneity exact: the whole search runs on unscaled values (so
// comparisons, argmax and stopping are identical for f and lambda f) and
// |scale| multiplies the final value once.
struct NormInput {
  std::function<Estimate(double)> lp;
  double scale = 1.0;
};

struct NormReport {
  double value = 0.0;
  double argmax_p = 0.0;
  int inset_depth = 0;     // deepening rounds performed at the open endpoints
  double stability = 0.0;  // relative change over the final two rounds
  double error = 0.0;      // propagated |.|_p error at the maximizer
  bool unbounded = false;
  bool divergent_lp = false;  // |f|_p diverged at an interior p
};

// ||f||_{G(psi)} = sup_{p in (A,B)} |f|_p / psi(p).
// Coarse two-sided geometric grid (>= 64 points) -> golden-section
// refinement around the best point -> endpoint inset-deepening while the
// value keeps rising by more than 0.1%. Degenerate psi_r returns |f|_r
// exactly. Unbounded verdicts: divergent interior |f|_p, or sustained
// geometric growth of the endpoint insets (5 consecutive >= 1.5x increases,
// or the depth/p_max cap hit with the last 5 increases >= 5%).
NormReport gls_norm(const NormInput& f, const PsiFunction& psi,
                    const BudgetOptions& opt = {});

// phi(delta; G(psi)) = ||1_A||_{G(psi)} for |A| = delta: sup_p delta^{1/p}/psi(p).
NormReport fundamental_function(const PsiFunction& psi, double delta,
                                const BudgetOptions& opt = {});

// Trend protocol shared by the two closure/comparison tests below. The
// underlying limits (p -> infinity) are not decidable numerically; the
// thresholds make the criteria testable, with an honest inconclusive state.
enum class Trend { vanishes, persists, inconclusive };

struct TrendReport {
  std::vector<double> p_grid;
  std::vector<double> ratio;
  Trend verdict = Trend::inconclusive;
  std::string note;
};

// Default trend grid {2, 4, 8, 16, 32, 50} (clipped to psi's support).
std::vector<double> default_trend_grid();

// Membership of f in G^0(psi) (the order-continuous part): ratio
// r(p) = |f|_p / psi(p) must fall below vanish_factor * max(r) after a
// monotone decrease (verdict vanishes -> in G^0); min of the last three
// points above persist_factor * max(r) -> persists (not in G^0).
// Requires psi's support unbounded above.
TrendReport g0_membership(const NormInput& f, const PsiFunction& psi,
                          std::vector<double> p_grid = {},
                          double vanish_factor = 0.1,
                          double persist_factor = 0.5);

// Same protocol applied to psi(p)/theta(p) (Does psi's space embed into
// theta's order-continuous part? vanishes <=> ratio tends to 0).
TrendReport psi_dominance(const PsiFunction& psi, const PsiFunction& theta,
                          std::vector<double> p_grid = {},
                          double vanish_factor = 0.1,
                          double persist_factor = 0.5);

}  // namespace gls
