#include <cmath>

#include "doctest.h"
#include "gls/common.hpp"
#include "gls/trigpoly.hpp"

using namespace gls;

TEST_CASE("corpus shape and determinism") {
  const auto& corpus = trig_corpus();
  REQUIRE(corpus.size() == 20);
  for (const TrigPolynomial& f : corpus) {
    CHECK(f.degree() >= 8);
    CHECK(f.degree() <= 64);
    for (double c : f.a) CHECK(std::fabs(c) <= 1.0);
    for (double c : f.b) CHECK(std::fabs(c) <= 1.0);
  }
  // Served from one deterministic construction.
  CHECK(&trig_corpus() == &corpus);
  CHECK(corpus[0].a[0] == trig_corpus()[0].a[0]);
}

TEST_CASE("conjugate is an exact involution up to sign") {
  for (const TrigPolynomial& f : trig_corpus()) {
    const TrigPolynomial g = conjugate(conjugate(f));
    REQUIRE(g.degree() == f.degree());
    for (int k = 0; k < f.degree(); ++k) {
      CHECK(g.a[k] == -f.a[k]);
      CHECK(g.b[k] == -f.b[k]);
    }
  }
}

TEST_CASE("conjugate maps cos to sin") {
  TrigPolynomial f;
  f.a = {1.0};
  f.b = {0.0};
  const TrigPolynomial g = conjugate(f);
  CHECK(g.a[0] == 0.0);
  CHECK(g.b[0] == 1.0);  // cos x -> sin x
  CHECK(g(kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("partial sums truncate and clamp") {
  const TrigPolynomial& f = trig_corpus()[0];
  const TrigPolynomial p8 = partial_sum(f, 8);
  CHECK(p8.degree() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(p8.a[k] == f.a[k]);
    CHECK(p8.b[k] == f.b[k]);
  }
  const TrigPolynomial full = partial_sum(f, f.degree() + 10);
  CHECK(full.degree() == f.degree());
  // Idempotency, coefficient-exact.
  const TrigPolynomial pp = partial_sum(p8, 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(pp.a[k] == p8.a[k]);
    CHECK(pp.b[k] == p8.b[k]);
  }
}

TEST_CASE("exponential coefficient moduli") {
  TrigPolynomial f;
  f.a = {1.0, 0.0};
  f.b = {0.0, 3.0};
  const auto m = exp_coeff_moduli(f);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == doctest::Approx(0.5).epsilon(1e-15));   // |(1 - 0i)/2|
  CHECK(m[1] == doctest::Approx(1.5).epsilon(1e-15));   // |(0 - 3i)/2|
}

TEST_CASE("pointwise evaluation") {
  TrigPolynomial f;
  f.a = {0.5, 0.0, 1.0};  // 0.5 cos x + cos 3x
  f.b = {0.0, 2.0, 0.0};  // + 2 sin 2x
  const double x = 0.8;
  const double want =
      0.5 * std::cos(x) + std::cos(3.0 * x) + 2.0 * std::sin(2.0 * x);
  CHECK(f(x) == doctest::Approx(want).epsilon(1e-15));
}
