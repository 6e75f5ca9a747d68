#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "doctest.h"
#include "gls/summation.hpp"

using namespace gls;

TEST_CASE("tree_sum basics") {
  CHECK(tree_sum(std::vector<double>{}) == 0.0);
  CHECK(tree_sum({3.25}) == 3.25);
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(i);
  CHECK(tree_sum(v) == 500500.0);
}

TEST_CASE("tree_sum determinism") {
  std::vector<double> v;
  double x = 0.1234;
  for (int i = 0; i < 10000; ++i) {
    v.push_back(std::sin(x));
    x += 0.071;
  }
  const double a = tree_sum(v);
  const double b = tree_sum(v);
  CHECK(a == b);  // bitwise
}

TEST_CASE("tree_logsumexp") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(tree_logsumexp({}) == -inf);
  CHECK(tree_logsumexp({-inf, -inf}) == -inf);
  CHECK(tree_logsumexp({std::log(1.0), std::log(3.0)}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-15));
  // Handles scales that overflow exp().
  CHECK(tree_logsumexp({1000.0, 1000.0}) ==
        doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("abel_tail vs closed form") {
  // sum_{n>=1} e^{inx}/n = -log(1 - e^{ix}); tail after N = full - partial.
  const double x = 1.0;
  const int N = 50;
  const std::complex<double> w(std::cos(x), std::sin(x));
  std::complex<double> full = -std::log(1.0 - w);
  std::complex<double> partial(0.0, 0.0);
  std::complex<double> wn(1.0, 0.0);
  for (int n = 1; n <= N; ++n) {
    wn *= w;
    partial += wn / static_cast<double>(n);
  }
  const std::complex<double> want = full - partial;
  const AbelTail got = abel_tail([](double n) { return 1.0 / n; }, N, x);
  CHECK(got.value.real() == doctest::Approx(want.real()).epsilon(1e-9));
  CHECK(got.value.imag() == doctest::Approx(want.imag()).epsilon(1e-9));
  CHECK(std::abs(got.value - want) <= std::max(got.error * 10.0, 1e-9));
}
