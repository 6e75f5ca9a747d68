#include "gls/trigpoly.hpp"

#include <cmath>
#include <random>

namespace gls {

double TrigPolynomial::operator()(double x) const {
  // Incremental rotation: e^{ikx} = e^{i(k-1)x} * e^{ix}. Degrees are <= 64,
  // so accumulated phase drift is far below double precision limits.
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = 1.0, sk = 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = cn;
    sk = sn;
    acc += a[k] * ck + b[k] * sk;
  }
  return acc;
}

TrigPolynomial conjugate(const TrigPolynomial& f) {
  // (a cos + b sin)~ = a sin - b cos
  TrigPolynomial g;
  g.a = f.b;
  for (double& v : g.a) v = -v;
  g.b = f.a;
  return g;
}

TrigPolynomial partial_sum(const TrigPolynomial& f, int m) {
  if (m >= f.degree()) return f;
  TrigPolynomial g;
  const auto n = static_cast<std::size_t>(m < 0 ? 0 : m);
  g.a.assign(f.a.begin(), f.a.begin() + n);
  g.b.assign(f.b.begin(), f.b.begin() + n);
  return g;
}

std::vector<double> exp_coeff_moduli(const TrigPolynomial& f) {
  std::vector<double> c(f.a.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = 0.5 * std::hypot(f.a[k], f.b[k]);
  return c;
}

const std::vector<TrigPolynomial>& trig_corpus() {
  static const std::vector<TrigPolynomial> corpus = [] {
    std::mt19937_64 rng(12345);
    auto uniform = [&rng] {  // [-1, 1), 53-bit mantissa, platform independent
      return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    };
    std::vector<TrigPolynomial> out;
    out.reserve(20);
    for (int i = 0; i < 20; ++i) {
      const int deg = 8 + static_cast<int>(rng() % 57);  // in [8, 64]
      TrigPolynomial f;
      f.a.resize(static_cast<std::size_t>(deg));
      f.b.resize(static_cast<std::size_t>(deg));
      for (int k = 0; k < deg; ++k) {
        f.a[static_cast<std::size_t>(k)] = uniform();
        f.b[static_cast<std::size_t>(k)] = uniform();
      }
      out.push_back(std::move(f));
    }
    return out;
  }();
  return corpus;
}

}  // namespace gls
