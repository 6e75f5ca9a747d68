#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gls/common.hpp"
#include "gls/sequence.hpp"
#include "gls/sharpness.hpp"

using namespace gls;

TEST_CASE("extremal family point values") {
  CHECK(eval_extremal("fab", {2, 4}, 4.0).value == 0.5);  // 4^{-1/2}
  CHECK(eval_extremal("fab", {2, 4}, 0.25).value ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));  // 4^{1/4}
  CHECK(eval_extremal("gm", {1}, kTwoPi / std::exp(2.0)).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(eval_extremal("powerlog", {2, 0}, 4).value == 0.5);  // 4^{-1/2}

  // Log-weighted sine series tracks its (pi/2)|log x|^Delta asymptote.
  const Estimate g = eval_extremal("gdelta_sin", {1}, 1e-3);
  const double pred = 0.5 * kPi * std::fabs(std::log(1e-3));
  CHECK(g.value / pred > 0.7);
  CHECK(g.value / pred < 1.3);

  // The singular point itself is refused.
  CHECK_THROWS_AS(eval_extremal("gdelta_sin", {1}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_extremal("no_such_family", {}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("identity ratios are exactly one") {
  const RatioReport r =
      ratio_V("fab", {2, 4}, RatioOperator::identity, {2.5, 3.0});
  CHECK(r.ratio[0] == 1.0);
  CHECK(r.ratio[1] == 1.0);
  CHECK(r.attained_fraction == 1.0);
}

TEST_CASE("hilbert attainment on the log-weighted family") {
  const RatioReport r =
      ratio_V("gdelta_sin", {8}, RatioOperator::hilbert, {50.0});
  REQUIRE(r.ratio.size() == 1);
  CHECK(r.ratio[0] >= 0.75);
  CHECK(r.ratio[0] == doctest::Approx(0.945).epsilon(0.02));
  CHECK(r.ratio[0] <= 1.0 + 1e-6);
}

TEST_CASE("leindler attainment near the blow-up exponent") {
  BudgetOptions b;
  b.series_terms = 100000;
  const RatioReport rT = ratio_V("leindler_y", {2, 1},
                                 RatioOperator::leindler_T, {0.98}, nullptr,
                                 0.5, b);
  const RatioReport rU = ratio_V("leindler_y", {2, 1},
                                 RatioOperator::leindler_U, {0.98}, nullptr,
                                 0.5, b);
  CHECK(rT.ratio[0] == doctest::Approx(1.205).epsilon(0.01));
  CHECK(rU.ratio[0] == doctest::Approx(0.971).epsilon(0.01));
  CHECK(rT.ratio[0] >= 0.8);
  CHECK_FALSE(rT.upper_bounded);

  CHECK(lower_bound_W(RatioOperator::leindler_T, seq_unit(1), 2.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("asymptotic relation checks land in band") {
  for (const double L : {1.0, 2.0, 4.0}) {
    CAPTURE(L);
    const AsymptoticReport a = asymptotic_check(AsymptoticKind::zeta_psi, {L});
    CHECK(a.in_band);
    for (const double r : a.ratio) {
      CHECK(r >= 0.5);
      CHECK(r <= 2.0);
    }
  }

  const AsymptoticReport t =
      asymptotic_check(AsymptoticKind::tail_power_log, {2, 1});
  CHECK(t.in_band);
  CHECK(t.monotone_trend);

  for (const double m : {1.0, 2.0}) {
    CAPTURE(m);
    const AsymptoticReport a = asymptotic_check(AsymptoticKind::gm_growth, {m});
    CHECK(a.in_band);
    CHECK(a.final_deviation < 10.0);
  }

  CHECK(asymptotic_check(AsymptoticKind::gm_hilbert, {1}).in_band);
  CHECK(asymptotic_check(AsymptoticKind::gdelta_log, {1, 1}).in_band);
  CHECK(asymptotic_check(AsymptoticKind::gdelta_log, {1, 0}).in_band);
  CHECK(
      asymptotic_check(AsymptoticKind::gamma_stabilization, {0.5, 1.0}).in_band);
}

TEST_CASE("weighted tail against its norm bound") {
  for (const double d : {0.0, 1.0}) {
    CAPTURE(d);
    const TailGapReport g = weighted_tail_gap(3.0, d);
    CHECK_FALSE(g.empty);
    CHECK(g.gap_slope >= 0.85);  // one extra log power lost, generically
    CHECK(g.gap_slope <= 1.15);
  }

  // A grid entirely below u = e carries no usable points.
  CHECK(weighted_tail_gap(3.0, 0.0, {1.0, 2.0}).empty);
}

TEST_CASE("entier tower") {
  CHECK(x_ent(1) == 15);
  CHECK(x_ent(2) == 1618);
  CHECK(x_ent(3) == 528491311);
  CHECK_THROWS_AS(x_ent(4), std::domain_error);
  CHECK_THROWS_AS(x_ent(-1), std::domain_error);
}
