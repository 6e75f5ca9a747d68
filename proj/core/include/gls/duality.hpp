#pragma once

#include <functional>
#include <string>

#include "gls/common.hpp"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"

namespace gls {

// --- Tail functions -------------------------------------------------------

enum class TailKind { closed_form, empirical };

// T(u) = mes{ |f| > u } for continuous sources (same measure as the norms:
// normalized on the torus, Lebesgue on the line), or the beta-weighted
// counting measure mu_beta{ n : |c(n)| > u } for sequences. Non-increasing
// in u by construction.
struct TailProfile {
  std::function<Estimate(double)> eval;  // u > 0
  TailKind kind = TailKind::closed_form;
  std::string domain_note;  // "continuous-measure" | "counting/beta-weighted"
  std::string tag;
};

// Tail of a registry function: analytic level-set inversion when the family
// provides one, otherwise crossing-bisection on a dense sample grid (trig
// polynomials; resolution limited by the grid near grazing levels). Sources
// with neither (oscillating series hybrids) are unsupported and throw.
TailProfile tail_profile(const FunctionSource& f);

// Tail of a sequence; monotonicity metadata (or a dense array) required.
TailProfile tail_profile(const WeightedSequence& c);

// Pointwise conveniences.
Estimate tail_function(const FunctionSource& f, double u);
Estimate tail_function(const WeightedSequence& c, double u);

// --- Tchebychev bound -----------------------------------------------------

struct TailBoundReport {
  double bound = kInf;  // valid upper bound for the tail at u
  double argmin_p = 0.0;
  bool edge = false;        // infimum still falling at the search cap
  double norm_value = 0.0;  // GLS norm the bound was built from
};

// Tail bound through the GLS norm: mes{|f| > u} <= inf_p [ ||f|| psi(p) / u ]^p,
// since |f|_p <= ||f|| psi(p) for every p in the support. With a natural psi
// the product ||f|| psi(p) collapses to |f|_p, giving the classical
// inf_p |f|_p^p / u^p. The infimum is taken on a log-spaced p-grid with
// golden-section polish; unbounded supports extend the grid geometrically
// (capped, with the cap hit reported as edge). Any grid point yields a valid
// bound, so the cap affects tightness only. Norm divergence propagates as an
// infinite bound.
TailBoundReport tchebychev_bound_from_norm(double norm_value,
                                           const PsiFunction& psi, double u,
                                           const BudgetOptions& opt = {});
TailBoundReport tchebychev_bound(const WeightedSequence& c,
                                 const PsiFunction& psi, double u,
                                 SeqVariant variant = SeqVariant::beta,
                                 const BudgetOptions& opt = {});
TailBoundReport tchebychev_bound(const FunctionSource& f,
                                 const PsiFunction& psi, double u,
                                 const BudgetOptions& opt = {});

// --- Norm from tail -------------------------------------------------------

// [ p * integral_0^inf u^{p-1} T(u) du ]^{1/p}, p >= 1, by dyadic u-windows
// spreading out from u = 1, Gauss-Legendre panels per window, half-node
// re-evaluation as the panel error estimate. Sustained growth of window
// contributions in either direction is reported as divergence.
Estimate norm_from_tail(const TailProfile& T, double p,
                        const BudgetOptions& opt = {});

// --- Young-Fenchel conjugation --------------------------------------------

// A convex function W on (domain_lo, domain_hi) with the initial bracket
// [z_lo, z_hi] used for conjugation and convexity certification.
struct ConvexProfile {
  std::function<double(double)> eval;
  double z_lo = 2.0;
  double z_hi = 200.0;
  double domain_lo = 0.0;    // hard limits: the search never leaves
  double domain_hi = kInf;   // (domain_lo, domain_hi)
  std::string tag;
};

struct ConjugateResult {
  double value = 0.0;  // sup_z [ y z - W(z) ]
  double argmax_z = 0.0;
  bool lower_bound_only = false;  // sup still rising at an exhausted bracket
};

// W*(y) on a 512-point log-spaced z-grid with golden-section polish around
// the grid argmax. While the argmax sits at a bracket edge the bracket
// extends geometrically (factor 10), clamped to the domain limits and to
// [1e-8, 1e8]; an argmax still at the edge after clamping is flagged as a
// lower bound only.
ConjugateResult young_fenchel(const ConvexProfile& W, double y);

struct ConvexityReport {
  bool ok = true;
  double worst_second_difference = 0.0;
  double at = 0.0;  // grid point of the worst violation
};

// Second-difference certificate on a uniform grid over [z_lo, z_hi].
ConvexityReport certify_convex(const ConvexProfile& W, int grid_points = 257,
                               double tol = 1e-9);

// --- N-function synthesis -------------------------------------------------

// N(u) = exp( W*(log u) ) with W(p) = p log psi(p). Requires u >= e^2 and a
// convexity certificate for W on psi's support; small u, degenerate psi, or
// certificate failure are rejected (std::invalid_argument).
double n_from_psi(const PsiFunction& psi, double u);

// log N(u) = W*(log u) directly. N itself overflows the double range long
// before the growth-scale checks stop caring, so scale tests use this form.
double log_n_from_psi(const PsiFunction& psi, double u);

// Evaluable N-function for the Orlicz norm: conjugation values above e^2
// (precomputed on a y-grid, interpolated), and the linear stitch
// N(u) = u * N(e^2) / e^2 below. Small-argument behaviour is a free
// convention on finite measure; the stitch keeps N convex.
std::function<double(double)> make_n_function(const PsiFunction& psi);

// --- Orlicz norm ----------------------------------------------------------

// inf_{v>0} v^{-1} (1 + integral N(v |f|) dmu) over the source's quadrature
// mesh: log-spaced v-probe then golden section on log v; overflowing
// objectives count as +inf; no finite objective anywhere => divergent
// verdict. Line tails beyond the window are integrated by dyadic extension
// blocks. The minimization runs on the unscaled source and |scale|
// multiplies once at the end (exact absolute homogeneity: scaling f shifts
// the optimal v by the reciprocal factor and the infimum scales linearly).
Estimate orlicz_norm(const FunctionSource& f,
                     const std::function<double(double)>& N,
                     const BudgetOptions& opt = {});

}  // namespace gls
