#include <cmath>
#include <vector>

#include "doctest.h"
#include "gls/quadrature.hpp"
#include "gls/source.hpp"

using namespace gls;

TEST_CASE("torus quadrature vs closed forms") {
  const FunctionSource f = src_cosx();
  LpEvaluator quad(f, {}, /*use_exact=*/false);
  LpEvaluator exact(f, {}, /*use_exact=*/true);
  for (double p : {1.5, 2.0, 7.0, 30.0}) {
    CHECK(quad(p).value ==
          doctest::Approx(exact(p).value).epsilon(1e-9));
  }
  // |cos|_1 = 2/pi and |cos|_2 = 1/sqrt(2) in the normalized measure.
  CHECK(exact(1.0).value == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
  CHECK(exact(2.0).value ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  LpEvaluator one(src_const1(), {});
  CHECK(one(3.7).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log-singular torus source g_m") {
  const FunctionSource g = src_gm(1.0);
  LpEvaluator quad(g, {}, false);
  LpEvaluator exact(g, {}, true);
  for (double p : {1.0, 2.0, 10.0, 50.0}) {
    CHECK(quad(p).value == doctest::Approx(exact(p).value).epsilon(1e-8));
  }
}

TEST_CASE("coefficient-series sources match their closed forms at Delta=0") {
  // sin series -> (pi - x)/2; cos series -> -log(2 sin(x/2)) on (0, pi).
  const FunctionSource gs = src_gdelta(0.0, true, 1'000'000);
  const FunctionSource gc = src_gdelta(0.0, false, 1'000'000);
  for (double x : {3.0, 1.0, 0.1, 1e-3}) {
    CHECK(gs.eval(x) == doctest::Approx(0.5 * (M_PI - x)).epsilon(1e-6));
    CHECK(gc.eval(x) ==
          doctest::Approx(-std::log(2.0 * std::sin(0.5 * x))).epsilon(1e-6));
  }
}

TEST_CASE("line sources: quadrature vs closed forms") {
  const FunctionSource fab = src_fab(2.0, 6.0);
  LpEvaluator quad(fab, {}, false);
  LpEvaluator exact(fab, {}, true);
  for (double p : {2.5, 4.0, 5.9}) {
    CHECK(quad(p).value == doctest::Approx(exact(p).value).epsilon(1e-7));
  }
  // Finite exactly on (a, b) = (2, 6).
  CHECK(quad(2.0).divergent);
  CHECK(quad(6.5).divergent);

  // f(x) = 1/(1+|x|): |f|_q^q = 2/(q-1).
  LpEvaluator absinv(src_absinv(), {}, false);
  for (double q : {1.25, 1.5, 1.75}) {
    CHECK(std::pow(absinv(q).value, q) ==
          doctest::Approx(2.0 / (q - 1.0)).epsilon(1e-6));
  }

  LpEvaluator gauss(src_gaussian(), {}, false);
  LpEvaluator gauss_exact(src_gaussian(), {}, true);
  CHECK(gauss(2.0).value == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-9));
  for (double p : {1.0, 4.0}) {
    CHECK(gauss(p).value ==
          doctest::Approx(gauss_exact(p).value).epsilon(1e-9));
  }

  LpEvaluator ind(src_indicator01(), {}, false);
  CHECK(ind(3.0).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fab point values") {
  const FunctionSource f = src_fab(2.0, 4.0);
  CHECK(f.eval(4.0) == doctest::Approx(0.5).epsilon(1e-15));        // 4^{-1/2}
  CHECK(f.eval(0.25) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // |f|_p^p = 1/(1 - p/4) + 1/(p/2 - 1) on (2, 4); p = 3 gives 6.
  CHECK(std::pow(LpEvaluator(f, {})(3.0).value, 3.0) ==
        doctest::Approx(6.0).epsilon(1e-10));
  CHECK_THROWS_AS(src_fab(4.0, 2.0), std::invalid_argument);
}

TEST_CASE("deep-chain budget reaches the extremal norm scale") {
  // |g_8|_50: the integrand mass sits at |log x| ~ 400, far below any
  // fixed-depth uniform mesh.
  const FunctionSource g = src_gdelta(8.0, true, 1'000'000);
  LpEvaluator lp(g, {}, false);
  const double got = lp(50.0).value;
  const double ref =
      0.5 * M_PI * std::exp((std::lgamma(401.0) - std::log(M_PI)) / 50.0);
  CHECK(got == doctest::Approx(ref).epsilon(0.02));
}

TEST_CASE("evaluator scale contract") {
  FunctionSource f = src_cosx();
  f.scale = 3.0;
  // eval stays unscaled; norms carry |scale|.
  CHECK(f.eval(0.0) == doctest::Approx(1.0));
  CHECK(LpEvaluator(f, {})(2.0).value ==
        doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-12));
}
