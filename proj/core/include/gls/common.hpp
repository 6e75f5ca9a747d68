#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace gls {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A numeric result with an attached error estimate. `divergent` marks values
// that failed to stabilize (or are analytically infinite); `value` is then
// meaningless and serialized as the string "divergent" by the report layer.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;

  static Estimate diverged() { return {kInf, kInf, true}; }
  bool finite() const { return !divergent && std::isfinite(value); }
};

// Open exponent interval (A, B), 1 <= A < B <= inf.
struct Interval {
  double a = 1.0;
  double b = kInf;
  bool unbounded() const { return std::isinf(b); }
  bool contains(double p) const { return p > a && p < b; }
};

// Truncation / evaluation budgets shared by series and quadrature code.
struct BudgetOptions {
  std::int64_t series_terms = 1'000'000;  // max direct terms per series norm
  int quad_levels = 200;                  // graded-mesh depth (cells per side)
  // Depth for torus chains toward log-type singularities: |log x|^{Dp}
  // carries its mass near level Dp/log 2, far beyond quad_levels. Cells in
  // the asymptotic region are cheap, so the deep default costs little.
  // (Capped at 916 internally: node coordinates must stay representable.)
  int quad_levels_log = 880;
  int quad_uniform_cells = 64;            // uniform cells for smooth parts
  int gl_nodes = 16;                      // Gauss-Legendre nodes per cell
  double p_max = 50.0;                    // stand-in upper bound when B = inf
};

}  // namespace gls
