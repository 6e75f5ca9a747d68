#include "gls/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gls/common.hpp"

namespace gls {

double pichorides(double p) {
  if (p <= 1.0) throw std::invalid_argument("pichorides: requires p > 1");
  return p <= 2.0 ? std::tan(kPi / (2.0 * p)) : 1.0 / std::tan(kPi / (2.0 * p));
}

namespace {

// Regularized lower incomplete gamma P(a,x) by power series, for x < a+1.
double lower_gamma_regularized_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  // P = x^a e^{-x} sum / Gamma(a)
  return std::exp(a * std::log(x) - x - std::lgamma(a)) * sum;
}

// log of the continued fraction for Gamma(a,x) e^{x} x^{-a}, for x >= a+1.
double log_upper_gamma_cf(double a, double x) {
  // Lentz's algorithm on the standard CF 1/(x+1-a- 1(1-a)/(x+3-a- ...)).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return -x + a * std::log(x) + std::log(h);
}

}  // namespace

double log_upper_gamma(double a, double x) {
  if (a <= 0.0) throw std::invalid_argument("log_upper_gamma: requires a > 0");
  if (x < 0.0) throw std::invalid_argument("log_upper_gamma: requires x >= 0");
  if (x == 0.0) return std::lgamma(a);
  if (x < a + 1.0) {
    const double p = lower_gamma_regularized_series(a, x);
    return std::lgamma(a) + std::log1p(-p);
  }
  return log_upper_gamma_cf(a, x);
}

double upper_gamma(double a, double x) { return std::exp(log_upper_gamma(a, x)); }

namespace {

GLRule make_gauss_legendre(int n) {
  GLRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] =
        2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GLRule& gauss_legendre(int n) {
  if (n < 2 || n > 128)
    throw std::invalid_argument("gauss_legendre: n out of range [2,128]");
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace gls
