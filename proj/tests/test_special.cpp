#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gls/special.hpp"

using namespace gls;

TEST_CASE("pichorides constant") {
  CHECK(pichorides(2.0) == 1.0);
  CHECK(pichorides(4.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  // Duality: K_H(p) = K_H(p/(p-1)).
  CHECK(pichorides(4.0 / 3.0) ==
        doctest::Approx(pichorides(4.0)).epsilon(1e-12));
  CHECK(pichorides(1.5) == doctest::Approx(std::tan(M_PI / 3.0)).epsilon(1e-14));
  // Blows up toward p = 1.
  CHECK(pichorides(1.001) > 100.0);
}

TEST_CASE("upper incomplete gamma") {
  // Gamma(1, x) = e^{-x}.
  CHECK(upper_gamma(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
  // Gamma(a, 0) = Gamma(a).
  CHECK(upper_gamma(3.0, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(upper_gamma(5.0, 0.0) == doctest::Approx(24.0).epsilon(1e-13));
  // log form agrees with the direct form where both are representable.
  CHECK(std::exp(log_upper_gamma(2.5, 1.0)) ==
        doctest::Approx(upper_gamma(2.5, 1.0)).epsilon(1e-12));
  // Stable at norm-scale exponents (would overflow without the log form).
  const double big = log_upper_gamma(401.0, std::log(2.0));
  CHECK(std::isfinite(big));
  CHECK(big > 1000.0);  // ~ log Gamma(401)
}

TEST_CASE("gauss-legendre rules") {
  const GLRule& r = gauss_legendre(16);
  REQUIRE(r.nodes.size() == 16);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  // Symmetry of the rule.
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r.nodes[i] == doctest::Approx(-r.nodes[15 - i]).epsilon(1e-15));
  }
  // Degree of exactness: a 16-node rule integrates x^30 exactly.
  double integral = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    integral += r.weights[i] * std::pow(r.nodes[i], 30);
  }
  CHECK(integral == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
  // Caching returns the same object.
  CHECK(&gauss_legendre(16) == &r);
}
