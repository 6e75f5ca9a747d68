#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/trigpoly.hpp"

namespace gls {

enum class Domain { torus, line };

// An evaluable function together with the metadata the quadrature and norm
// layers need: grading anchors, closed-form norms when available, and (for
// line functions) window/tail structure. Torus norms are taken in the
// normalized measure dx/(2pi) on (-pi, pi]; line norms in Lebesgue measure.
struct FunctionSource {
  Domain domain = Domain::torus;
  std::function<double(double)> eval;  // unscaled; norms report |scale| * ...
  double scale = 1.0;
  std::string tag;

  // Structured registry identity for exact operator rewrites (e.g. the
  // conjugate of a coefficient series family is again a registry family).
  std::string family;
  std::vector<double> family_params;

  // Mesh grading anchors (singularities / kinks of |f|).
  std::vector<double> singular_points;

  // Optional closed-form |f|_p of the unscaled function (null if absent).
  std::function<Estimate(double)> lp_exact;

  // Optional closed-form tail mes{ |f| > u } of the unscaled function, in
  // the same measure as the norms (normalized on the torus, Lebesgue on the
  // line). Null when no analytic inversion exists.
  std::function<double(double)> tail_closed;

  // Line functions: quadrature covers [-window, window] (or [0, window] when
  // support_positive); tail_lp(p, X) = integral over |x| > X of |f|^p when
  // set (closed form; tail_exact says whether it is exact or an upper
  // bound), otherwise f vanishes beyond the window.
  double window = kPi;
  bool support_positive = false;
  std::function<double(double, double)> tail_lp;
  bool tail_exact = true;

  // Oscillatory functions (transform outputs): quadrature cells are split to
  // at most this length so a 16-node rule resolves each oscillation.
  double osc_length = 0.0;  // 0 = not oscillatory

  bool even = false;
  bool odd = false;
  int trig_degree = -1;  // >= 0: trig polynomial, uniform-mesh quadrature
};

// --- Torus registry -------------------------------------------------------

// f = 1.
FunctionSource src_const1();
// f = cos x.
FunctionSource src_cosx();
// Trig-polynomial-backed source.
FunctionSource src_poly(const TrigPolynomial& f, std::string tag);
// Extremal log-series  sum_{n>=1} n^{-1} log^Delta(n) {sin,cos}(nx)
// (for Delta = 0 the n = 1 term is sin x resp. cos x). Hybrid evaluator:
// direct summation to N ~ 40/|x| plus a repeated-Abel-summation tail, with
// the closed-form asymptote below x = 40/series_terms.
FunctionSource src_gdelta(double delta, bool sine, std::int64_t series_terms);
// g_m(x) = |log(|x|/2pi)|^{1/m}, m >= 1.
FunctionSource src_gm(double m);

// --- Line registry --------------------------------------------------------

// Indicator of [0, 1].
FunctionSource src_indicator01();
// f(x) = 1/(1 + |x|).
FunctionSource src_absinv();
// f(x) = exp(-x^2/2).
FunctionSource src_gaussian();
// f(x) = x^{-1/b} on (0,1), x^{-1/a} on [1,inf), 0 elsewhere; 0 < a < b.
// f lies in L_p exactly for a < p < b.
FunctionSource src_fab(double a, double b);

}  // namespace gls
