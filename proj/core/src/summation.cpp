#include "gls/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gls/common.hpp"

namespace gls {

double tree_sum(const double* v, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return v[0];
  if (n == 2) return v[0] + v[1];
  const std::size_t half = n / 2;
  return tree_sum(v, half) + tree_sum(v + half, n - half);
}

double tree_logsumexp(const std::vector<double>& logv) {
  double m = -kInf;
  for (double x : logv) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // all -inf (empty) or a +inf entry
  std::vector<double> shifted(logv.size());
  for (std::size_t i = 0; i < logv.size(); ++i)
    shifted[i] = std::exp(logv[i] - m);
  return m + std::log(tree_sum(shifted));
}

namespace {

// argmin over L in [1, max_level] of L!/(N|1-w|)^L + 4 eps (2/|1-w|)^L.
// First term: analytic forward-difference decay of smooth power-log h;
// second: roundoff amplification of the difference table.
int pick_abel_level(double n_start, double one_minus_abs, int max_level,
                    double* rel_estimate) {
  const double eps = std::numeric_limits<double>::epsilon();
  double best = kInf;
  int best_level = 1;
  double factorial = 1.0;
  for (int level = 1; level <= max_level; ++level) {
    factorial *= level;
    const double analytic =
        factorial / std::pow(n_start * one_minus_abs, level);
    const double noise = 4.0 * eps * std::pow(2.0 / one_minus_abs, level);
    const double total = analytic + noise;
    if (total < best) {
      best = total;
      best_level = level;
    }
  }
  *rel_estimate = best;
  return best_level;
}

}  // namespace

AbelTail abel_tail(const std::function<double(double)>& h, double n_start,
                   double x, int max_level) {
  const std::complex<double> omega(std::cos(x), std::sin(x));
  const std::complex<double> one_minus = 1.0 - omega;
  const double oma = std::abs(one_minus);

  AbelTail out;
  if (oma == 0.0) {  // x = 0 mod 2pi: no oscillation, tail not summable here
    out.error = kInf;
    return out;
  }

  double rel_estimate = 0.0;
  const int level = pick_abel_level(n_start, oma, max_level, &rel_estimate);
  out.level = level;

  // Forward differences of h at n_start, computed in extended precision.
  // The summation-by-parts recursion S(g, M) = (w^M g(M) + w S(Dg, M))/(1-w)
  // unrolls to S = w^M sum_j D^j g(M) w^j/(1-w)^{j+1} over the table leads.
  std::vector<long double> diffs(static_cast<std::size_t>(level) + 1);
  for (int j = 0; j <= level; ++j)
    diffs[static_cast<std::size_t>(j)] =
        static_cast<long double>(h(n_start + j));
  std::vector<double> lead(static_cast<std::size_t>(level));
  for (int j = 0; j < level; ++j) {
    lead[static_cast<std::size_t>(j)] = static_cast<double>(diffs[0]);
    for (int k = 0; k < level - j; ++k) diffs[k] = diffs[k + 1] - diffs[k];
  }

  // exp(i n_start x) with the phase reduced before the trig call.
  const double phase = std::fmod(n_start * x, kTwoPi);
  const std::complex<double> w_n1(std::cos(phase), std::sin(phase));

  std::complex<double> acc(0.0, 0.0);
  for (int j = level - 1; j >= 0; --j)
    acc = (w_n1 * lead[static_cast<std::size_t>(j)] + omega * acc) / one_minus;

  out.value = acc;
  out.error = std::abs(lead[0]) / oma * rel_estimate;
  return out;
}

}  // namespace gls
