#pragma once

#include <vector>

namespace gls {

// Sharp L_p constant of the Hilbert transform (conjugate function):
// tan(pi/2p) for p <= 2, cot(pi/2p) for p >= 2.
double pichorides(double p);

// log of the (unnormalized) upper incomplete gamma function Gamma(a, x),
// a > 0, x >= 0. Stable for large a (norm-scale exponents) via the
// series/continued-fraction split at x = a + 1.
double log_upper_gamma(double a, double x);
double upper_gamma(double a, double x);

// Gauss-Legendre rule on [-1, 1]; nodes/weights cached per n.
struct GLRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GLRule& gauss_legendre(int n);

}  // namespace gls
