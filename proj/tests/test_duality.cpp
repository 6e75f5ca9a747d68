#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gls/common.hpp"
#include "gls/duality.hpp"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"
#include "gls/trigpoly.hpp"

using namespace gls;

namespace {

ConvexProfile profile_square() {
  ConvexProfile W;
  W.eval = [](double z) { return 0.5 * z * z; };
  W.tag = "z2_half";
  return W;
}

ConvexProfile profile_entropy() {
  ConvexProfile W;
  W.eval = [](double z) { return z < 1e-300 ? 0.0 : z * std::log(z) - z; };
  W.tag = "zlogz";
  return W;
}

}  // namespace

TEST_CASE("Young-Fenchel closed forms") {
  // (z^2/2)*(y) = y^2/2; (z log z - z)*(y) = e^y.
  CHECK(young_fenchel(profile_square(), 3.0).value ==
        doctest::Approx(4.5).epsilon(1e-10));
  CHECK(young_fenchel(profile_entropy(), 1.0).value ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("Fenchel-Moreau biconjugation recovers convex W") {
  const ConvexProfile Wsq = profile_square();
  ConvexProfile Wsq_star;
  Wsq_star.eval = [&](double y) { return young_fenchel(Wsq, y).value; };
  for (const double z : {2.0, 5.0, 21.0, 89.0, 200.0}) {
    CAPTURE(z);
    CHECK(young_fenchel(Wsq_star, z).value ==
          doctest::Approx(0.5 * z * z).epsilon(1e-8));
  }

  const ConvexProfile Went = profile_entropy();
  ConvexProfile Went_star;
  Went_star.eval = [&](double y) { return young_fenchel(Went, y).value; };
  for (const double z : {2.0, 5.0, 21.0, 89.0}) {
    CAPTURE(z);
    CHECK(young_fenchel(Went_star, z).value ==
          doctest::Approx(z * std::log(z) - z).epsilon(1e-8));
  }
}

TEST_CASE("convexity certificates") {
  CHECK(certify_convex(profile_square()).ok);
  CHECK(certify_convex(profile_entropy()).ok);

  ConvexProfile bad;  // concave on the whole bracket
  bad.eval = [](double z) { return std::sqrt(z); };
  const ConvexityReport rep = certify_convex(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.worst_second_difference < 0.0);
}

TEST_CASE("growth scale from psi") {
  const PsiFunction psi1 = make_exponent_psi(1.0);  // N(u) = exp(u/e)
  CHECK(log_n_from_psi(psi1, std::exp(4.0)) ==
        doctest::Approx(std::exp(3.0)).epsilon(1e-9));
  CHECK(log_n_from_psi(psi1, std::exp(8.0)) ==
        doctest::Approx(std::exp(7.0)).epsilon(1e-9));

  // Two-point log-log slope identifies the growth exponent m for
  // psi(p) = p^{1/m}.
  const PsiFunction psih = make_exponent_psi(0.5);
  const double s1 = (std::log(log_n_from_psi(psi1, std::exp(8.0))) -
                     std::log(log_n_from_psi(psi1, std::exp(4.0)))) /
                    4.0;
  const double s2 = (std::log(log_n_from_psi(psih, std::exp(8.0))) -
                     std::log(log_n_from_psi(psih, std::exp(4.0)))) /
                    4.0;
  CHECK(s1 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(s2 == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(n_from_psi(psi1, 5.0), std::invalid_argument);
}

TEST_CASE("tail functions against closed forms") {
  CHECK(tail_function(src_gm(1.0), 2.0).value ==
        doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(tail_function(seq_harmonic(), 0.35).value ==
        doctest::Approx(2.0).epsilon(1e-14));

  // Bisection tail of cos vs the level-set formula (2/pi) acos(u).
  TrigPolynomial cosp;
  cosp.a = {1.0};
  cosp.b = {0.0};
  const TailProfile tp = tail_profile(src_poly(cosp, "cos"));
  for (const double u : {0.2, 0.5, 0.9}) {
    CAPTURE(u);
    CHECK(tp.eval(u).value ==
          doctest::Approx(2.0 / kPi * std::acos(u)).epsilon(1e-9));
  }
}

TEST_CASE("norm_from_tail round trips") {
  TailProfile ind;  // tail of an indicator of a unit-measure set
  ind.eval = [](double u) {
    Estimate e;
    e.value = u < 1.0 ? 1.0 : 0.0;
    return e;
  };
  CHECK(norm_from_tail(ind, 2.0).value == doctest::Approx(1.0).epsilon(1e-12));

  const FunctionSource g1 = src_gm(1.0);
  CHECK(norm_from_tail(tail_profile(g1), 3.0).value ==
        doctest::Approx(g1.lp_exact(3.0).value).epsilon(1e-6));

  const WeightedSequence a20 = seq_power_log(2.0, 0.0);
  CHECK(norm_from_tail(tail_profile(a20), 3.0).value ==
        doctest::Approx(lp_sequence(a20, 3.0).value).epsilon(0.01));
}

TEST_CASE("tchebychev bound dominates the tail") {
  const WeightedSequence c = seq_harmonic();
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(1.05 + 3.0 * i / 63.0);
  const PsiFunction nat = make_natural_psi(
      [&](double p) { return lp_sequence(c, p); }, grid, "harmonic");
  const TailBoundReport tb = tchebychev_bound(c, nat, 0.35, SeqVariant::plain);
  CHECK(std::isfinite(tb.bound));
  CHECK(tb.bound >= 2.0);  // true tail measure at u = 0.35
  CHECK(tb.argmin_p > 1.0);
}

TEST_CASE("orlicz norm") {
  FunctionSource one = src_const1();
  const auto N2 = [](double u) { return u * u; };
  CHECK(orlicz_norm(one, N2).value == doctest::Approx(2.0).epsilon(1e-10));

  one.scale = 2.0;  // exact absolute homogeneity
  CHECK(orlicz_norm(one, N2).value == doctest::Approx(4.0).epsilon(1e-10));

  TrigPolynomial zero;
  zero.a = {0.0};
  zero.b = {0.0};
  CHECK(orlicz_norm(src_poly(zero, "zero"), N2).value == 0.0);
}

TEST_CASE("synthesized N-function") {
  const auto N = make_n_function(make_exponent_psi(1.0));
  // Above the stitch point this is exp(u/e) up to interpolation error.
  CHECK(N(20.0) ==
        doctest::Approx(std::exp(20.0 / std::exp(1.0))).epsilon(1e-3));
  CHECK(N(300.0) ==
        doctest::Approx(std::exp(300.0 / std::exp(1.0))).epsilon(1e-3));

  // Orlicz norm against it stays finite and positive for a decaying source.
  const Estimate e = orlicz_norm(src_gm(1.0), N);
  CHECK(std::isfinite(e.value));
  CHECK(e.value > 0.0);
}
