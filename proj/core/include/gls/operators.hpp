#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"
#include "gls/trigpoly.hpp"

namespace gls {

// --- Fourier analysis on the torus ----------------------------------------

// Real Fourier data against the normalized measure dx/(2pi):
//   c0  = (2pi)^{-1} int f dx,
//   a_k = pi^{-1} int f cos kx dx,   b_k = pi^{-1} int f sin kx dx,
// so the complex coefficients are c(+-k) = (a_k -+ i b_k)/2 and the partial
// sum s_M = c0 + sum_{k<=M} (a_k cos kx + b_k sin kx) reproduces a trig
// polynomial of degree <= M exactly.
struct TorusCoefficients {
  double c0 = 0.0;
  std::vector<double> a, b;  // 1-based: a[k-1] = a_k

  int degree() const { return static_cast<int>(a.size()); }
  TrigPolynomial poly() const;            // mean-zero part
  std::vector<double> moduli() const;     // |c(k)| = hypot(a_k, b_k)/2, k >= 1
  double eval(double x, int m = -1) const;  // s_m(x); m < 0 = full degree
};

// Exact coefficient copy (zeros beyond the degree).
TorusCoefficients fourier_torus(const TrigPolynomial& f, int M);

// Coefficients of a torus source up to degree M. Sources flagged as trig
// polynomials use an equispaced grid of 2 max(M, deg) + 1 samples (exact by
// discrete orthogonality); general sources use a composite Gauss-Legendre
// mesh graded toward their singular points, with cells split so no cell
// spans more than a quarter period of cos(Mx).
TorusCoefficients fourier_torus(const FunctionSource& f, int M,
                                const BudgetOptions& opt = {});

// Evaluable s_M (including the constant term) as a torus source.
FunctionSource sm_source(const TorusCoefficients& c, int M,
                         std::string tag = "sM");

// --- Hilbert transform (periodic) -----------------------------------------

// Conjugate series in coefficient space (exact):
//   sum a_k cos kx + b_k sin kx  ->  sum a_k sin kx - b_k cos kx.
TrigPolynomial hilbert_periodic(const TrigPolynomial& f);

// Periodic Hilbert transform of a source. Coefficient families with an
// exact conjugate rewrite (the log-weighted sine/cosine series) are mapped
// structurally; trig-polynomial sources go through exact coefficients; all
// other sources are expanded by quadrature up to max_degree and must pass a
// coefficient-decay check (largest tail-decile modulus below decay_tol times
// the largest modulus), otherwise a degree-insufficient std::runtime_error
// is thrown. The constant term is annihilated.
FunctionSource hilbert_periodic(const FunctionSource& f,
                                const BudgetOptions& opt = {},
                                int max_degree = 256,
                                double decay_tol = 1e-8);

// Principal-value form (conjugate-function kernel), usable on sources whose
// coefficients are out of reach (log-singular extremal families) and as a
// cross-check of the coefficient route on smooth inputs:
//   H[f](x) = (2pi)^{-1} int_0^pi [f(x-s) - f(x+s)] cot(s/2) ds.
// The symmetric difference cancels the kernel singularity analytically; the
// quadrature grades into s = 0 and into every point where x -+ s crosses a
// singularity of f. x at a singularity of f is rejected.
Estimate hilbert_periodic_pv(const FunctionSource& f, double x,
                             const BudgetOptions& opt = {});

// --- Hilbert transform (line) ---------------------------------------------

// H[f](x) = pi^{-1} p.v. int f(t)/(x-t) dt
//         = pi^{-1} int_0^inf [f(x-s) - f(x+s)] / s ds.
// Dyadic windows in s with graded panels toward s = 0 and the images of
// f's singular points; the far field is summed until contributions go
// quiet, with sustained growth reported as divergence (non-decaying f).
// x at a singularity of f is rejected.
Estimate hilbert_line(const FunctionSource& f, double x,
                      const BudgetOptions& opt = {});

// --- Fourier transform (line) ---------------------------------------------

struct FourierPoint {
  double re = 0.0, im = 0.0;
  double error = 0.0;       // remainder bound for the truncated window
  bool stabilized = true;   // false: window doubling hit its cap first
  double modulus() const;
};

// F[f](t) = int e^{itx} f(x) dx as the limit of integrals over [-a, a] with
// a doubled until the remainder bound (window-decay geometric tail, or the
// oscillatory bound 2 sup_{|x|>=a}|f| / |t| once half a period fits) falls
// below rel_tol of the running modulus. Within each window, cells are split
// so none spans more than a quarter period of e^{itx}, keeping the fixed
// Gauss rule accurate per oscillation. A cap on the doubling (~2^200)
// reached first is reported as non-stabilized.
FourierPoint fourier_line(const FunctionSource& f, double t,
                          const BudgetOptions& opt = {},
                          double rel_tol = 1e-6);

// |F[f](t)| as a line source (for norms of the transform). The window must
// cover the caller's range of interest; beyond it the modulus is treated as
// vanishing unless a tail_lp closure is attached by the caller.
FunctionSource transform_source(const FunctionSource& f, double window,
                                const BudgetOptions& opt = {},
                                double rel_tol = 1e-8);

// Truncated inverse  S_M[f](x) = (2pi)^{-1} int_{-M}^{M} F[f](t) e^{-itx} dt.
Estimate fourier_line_partial_inverse(const FunctionSource& f, double M,
                                      double x, const BudgetOptions& opt = {},
                                      double rel_tol = 1e-8);

struct ParsevalReport {
  double lhs = 0.0;  // int |F[f]|^2 dt
  double rhs = 0.0;  // 2pi int |f|^2 dx
  double rel_gap = 0.0;
};

// Plancherel identity under this transform convention, by quadrature on
// both sides.
ParsevalReport parseval_line(const FunctionSource& f,
                             const BudgetOptions& opt = {});

// --- Sharp and shape constants --------------------------------------------

enum class SharpConstantKind {
  pichorides,       // tan(pi/2p) for p <= 2, cot(pi/2p) for p >= 2
  gamma_weight,     // gamma^{-2} / (p0 - p), p0 = 1/gamma  (asymptote shape)
  riesz,            // p^d shape of the partial-sum bound
  paley,            // p shape of the coefficient bound
  hausdorff_young,  // (2pi)^{1/p}: exact for this transform convention
  maximal_s,        // p^4/(p-1)^3 shape
  maximal_R,        // p^4/(p-1)^2 shape
  maximal_F,        // (p-1)^{-2} shape
};

struct SharpConstant {
  double value = 0.0;
  bool shape_only = false;  // absolute prefactor unknown, reported as 1
};

// param: gamma for gamma_weight (required, in (0,1)); dimension d for riesz
// (default 1). Out-of-range p throws std::invalid_argument.
SharpConstant sharp_constant(SharpConstantKind kind, double p,
                             double param = 0.0);

// --- Weight operator -------------------------------------------------------

// Interleaving lambda(1) = a(0), lambda(2) = b(1), lambda(3) = a(1), ... of
// two nonincreasing nonnegative coefficient lists, with the weighted norm
// |lambda|^{(gamma)}_p = [ sum n^{p(1+gamma)-2} |lambda(n)|^p ]^{1/p} taken
// on p in (1, 1/gamma).
struct WeightGamma {
  std::vector<double> lambda;
  double gamma = 0.0;
  double p0 = 0.0;  // 1/gamma
};

// Rejects gamma outside (0,1) and non-monotone (increasing somewhere)
// coefficient lists; monotonicity is the standing assumption of the
// weighted-norm theory this implements.
WeightGamma weight_gamma_apply(const std::vector<double>& a,
                               const std::vector<double>& b, double gamma);

// |lambda|^{(gamma)}_p of the interleaved list (finite sum).
Estimate gamma_norm(const WeightGamma& w, double p);
// Same norm for a registry coefficient sequence (analytic tail applies).
Estimate gamma_norm(const WeightedSequence& lambda, double gamma, double p);

// U_gamma[f](x) = |x|^{-gamma} f(x) on the torus (adds x = 0 to the
// grading anchors).
FunctionSource ugamma_source(const FunctionSource& f, double gamma);

// --- Maximal operators -----------------------------------------------------

// Grid suprema: lower bounds of the true suprema, with the grid recorded.
struct MaximalResult {
  FunctionSource fn;
  std::vector<double> grid;
  std::string note;
};

// s*[f](x) = max_{1 <= M <= m_max} |s_M[f](x)|  (m_max < 0: full degree).
MaximalResult maximal_s_star(const TorusCoefficients& c, int m_max = -1);

// F*[f](x) = max_a |int_{-a}^{a} f(t) e^{ixt} dt| over the given a-grid.
MaximalResult maximal_F_star(const FunctionSource& f,
                             std::vector<double> a_grid,
                             const BudgetOptions& opt = {});

// R*[f](x) = max_a |int f(t) sin(a(x-t))/(x-t) dt| over the given a-grid.
MaximalResult maximal_R_star(const FunctionSource& f,
                             std::vector<double> a_grid,
                             const BudgetOptions& opt = {});

// --- Classical bound checks ------------------------------------------------

enum class BoundCheckKind {
  hilbert_lp,        // |H f|_p <= K_H(p) |f|_p on the trig corpus
  hilbert_gls,       // ||H f||_{G psi^{(H)}} <= ||f||_{G psi}
  riesz_sM,          // |s_M f|_p <= 2 p |f|_p
  maximal_s_shape,   // |s* f|_p <= p^4/(p-1)^3 |f|_p
  paley,             // |f|_p <= 2 p |c|_{p,nu}  (p >= 2)
  hy_discrete,       // |c|_q <= |f|_p, q = p/(p-1), p in (1, 2]
  hy_line,           // |F f|_p <= (2pi)^{1/p} |f|_q on the line
  leindler_T,        // |T x|_{p,beta} <= p |x|_{p,beta}
  leindler_U,        // |U x|_{p,beta} <= p |x|_{p,beta}
  theorem_gamma,     // |U_gamma f|_p / |lambda|^{(gamma)}_p pole order ~ 1
};

struct CheckRecord {
  std::string id;     // source / parameter identifier
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  bool pass = true;
};

struct BoundCheckReport {
  std::string kind;
  std::vector<CheckRecord> records;
  bool aggregate_pass = true;
  double fit_exponent = 0.0;  // theorem_gamma: fitted blow-up order
  std::string note;
};

struct BoundCheckConfig {
  std::vector<double> p_grid;  // empty: per-kind default
  double tol = -1.0;           // < 0: per-kind default
  std::vector<int> m_grid;     // riesz_sM truncation degrees
  double gamma = 0.5;          // theorem_gamma
  double delta = 1.0;          // theorem_gamma log power
  double s = 2.0, theta = 1.0;            // leindler corpus
  std::int64_t n_trunc = 100'000;         // leindler truncation
  int corpus_limit = 0;        // > 0: first k corpus polynomials only
  BudgetOptions budget;
};

BoundCheckReport bound_check(BoundCheckKind kind,
                             const BoundCheckConfig& cfg = {});

const char* bound_check_name(BoundCheckKind kind);

}  // namespace gls
