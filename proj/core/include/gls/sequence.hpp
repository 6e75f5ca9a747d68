#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/space.hpp"

namespace gls {

// Closed-form asymptotic descriptor: term(n) ~ n^{-A(p)} log^{Q(p)} n.
// Composable across norm variants (extra polynomial weights shift A only),
// and integrable in closed form via the upper incomplete gamma function.
struct PowerLogShape {
  std::function<double(double)> exponent;   // A(p)
  std::function<double(double)> log_power;  // Q(p)
};

enum class SeqMonotone { none, decreasing, increasing };

// A sequence c(n) with weight beta(n), n >= 1. Either closed-form closures
// (with optional power-log descriptors enabling analytic tails) or a dense
// finite array (operator outputs, custom CSV input). Immutable in use.
struct WeightedSequence {
  std::function<double(double)> coeff;   // c(n)
  std::function<double(double)> weight;  // beta(n) >= 0
  std::int64_t truncation = 1'000'000;
  double scale = 1.0;  // norms report |scale| * (norm of coeff)
  std::string family_tag;

  // |c(n)|^p ~ n^{-A_c(p)} log^{Q_c(p)} n  as n -> inf (closed-form families)
  std::optional<PowerLogShape> coeff_shape;
  // beta(n) = n^{-A_w} log^{Q_w} n exactly-asymptotically (p-independent)
  std::optional<std::pair<double, double>> weight_shape;

  SeqMonotone monotone = SeqMonotone::none;
  double monotone_from = 1.0;  // |c| monotone for n >= monotone_from

  std::vector<double> dense;  // when non-empty: c(n)=dense[n-1], n<=size
  bool is_dense() const { return !dense.empty(); }
};

// --- Registry -------------------------------------------------------------

// c(n) = n^{-1/L} log^q n (c(1)=0 when q>0), beta = 1.
WeightedSequence seq_power_log(double L, double q);
// c(n) = 1/n, beta = 1.
WeightedSequence seq_harmonic();
// c = e_k (1 at n=k, else 0), beta = 1.
WeightedSequence seq_unit(int k = 1);
// dense coefficients with unit weight.
WeightedSequence seq_dense(std::vector<double> c, std::string tag = "dense");
// Leindler sharpness corpus: beta(n) = n^{-1-s}, x(n) = n^{1+theta}/s,
// truncated to a dense array of length n.
WeightedSequence seq_leindler_corpus(double s, double theta, std::int64_t n);
// a(k) = k with weight beta(k) = k^{-b-1} log^Delta k.
WeightedSequence seq_weighted_ab(double b, double delta);
// lambda(n) = n^{-1} log^Delta n (lambda(1) = 0).
WeightedSequence seq_log_lambda(double delta);

// --- Norms ----------------------------------------------------------------

enum class SeqVariant { plain, nu, beta, gamma_weight };

// [sum_n |c(n)|^p w_variant(n)]^{1/p} with
//   plain:        w = 1
//   nu:           w = n^{p-2} + 1            (requires p >= 2)
//   beta:         w = beta(n)
//   gamma_weight: w = n^{p(1+gamma)-2}       (requires p in (1, 1/gamma))
// Direct summation plus analytic power-log tail when descriptors are
// available; truncated-with-Cauchy-check otherwise. p > 0 (the p < 1 range is
// a quasi-norm, used by sharpness sweeps).
Estimate lp_sequence(const WeightedSequence& c, double p,
                     SeqVariant variant = SeqVariant::plain,
                     double gamma = 0.0);

// Analytic tail sum_{n > n0} n^{-a} log^q n (Euler-Maclaurin corrected
// integral; requires a > 1, q >= 0, n0 >= 2). Exposed for tests and for the
// weight tails used by Leindler's U operator.
Estimate powerlog_tail(double a, double q, double n0);

// --- Tail function --------------------------------------------------------

// mu_beta{ n : |c(n)| > u }. Uses monotonicity metadata; counting weight is
// exact, weighted tails are summed fresh from the threshold index upward
// (never by subtracting prefix sums) plus the analytic weight tail.
Estimate sequence_tail_measure(const WeightedSequence& c, double u);

// Adapter for the GLS norm engine: unscaled |c|_{p,variant} closure plus the
// structural scale, so the sup-search is scale-invariant.
NormInput norm_input(const WeightedSequence& c,
                     SeqVariant variant = SeqVariant::plain,
                     double gamma = 0.0);

// --- Leindler operators ---------------------------------------------------

enum class LeindlerOp { T, U };

// T[x](n) = sum_{k>=n} x(k) beta(k) / Sigma(k),  Sigma(k) = sum_{j<=k} beta(j)
// U[x](n) = sum_{k<=n} x(k) beta(k) / sigma(k),  sigma(k) = sum_{i>=k} beta(i)
// Input must be dense (truncated corpus); output is dense with the same
// weight. U requires summable beta (analytic weight tail present).
WeightedSequence leindler_apply(const WeightedSequence& x, LeindlerOp op);

}  // namespace gls
