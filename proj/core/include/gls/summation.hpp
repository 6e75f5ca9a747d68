#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace gls {

// Deterministic pairwise (tree) reduction. Used for every accumulation whose
// result appears in a report, so serial and fan-out runs agree bitwise.
double tree_sum(const double* v, std::size_t n);
inline double tree_sum(const std::vector<double>& v) {
  return tree_sum(v.data(), v.size());
}

// log(sum(exp(logv[i]))) with the same deterministic tree order; tolerates
// -inf entries (empty contributions). Returns -inf for an all-empty input.
double tree_logsumexp(const std::vector<double>& logv);

// Tail of sum_{n>N} h(n) e^{inx} by repeated Abel (partial) summation with
// closed-form geometric sums. The depth L is chosen to balance the analytic
// remainder ~ L! / (N |1-w|)^L against finite-difference roundoff, which the
// recursion amplifies by (2/|1-w|)^L.
struct AbelTail {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;  // absolute estimate for |value - true tail|
  int level = 0;
};

AbelTail abel_tail(const std::function<double(double)>& h, double n_start,
                   double x, int max_level = 10);

}  // namespace gls
