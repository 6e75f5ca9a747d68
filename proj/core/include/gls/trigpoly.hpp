#pragma once

#include <cstddef>
#include <vector>

namespace gls {

// Real trigonometric polynomial sum_{k=1}^{deg} a_k cos kx + b_k sin kx
// (mean zero; coefficients are 1-based: a[k-1] holds a_k; a and b must have
// the same length).
struct TrigPolynomial {
  std::vector<double> a;
  std::vector<double> b;

  int degree() const { return static_cast<int>(a.size()); }
  double operator()(double x) const;
};

// Conjugate function: a_k cos + b_k sin -> a_k sin - b_k cos.
TrigPolynomial conjugate(const TrigPolynomial& f);

// Partial sum of the first m harmonics (m >= degree returns f unchanged).
TrigPolynomial partial_sum(const TrigPolynomial& f, int m);

// Modulus of the complex exponential coefficient c_k = (a_k - i b_k)/2 for
// k >= 1 (and |c_{-k}| = |c_k| for real f).
std::vector<double> exp_coeff_moduli(const TrigPolynomial& f);

// Deterministic test corpus: 20 mean-zero polynomials, degrees in [8, 64],
// coefficients uniform in [-1, 1]. Fully specified by raw mt19937_64(12345)
// output (no library distributions), identical on every platform.
const std::vector<TrigPolynomial>& trig_corpus();

}  // namespace gls
