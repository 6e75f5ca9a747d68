#include <cmath>

#include "doctest.h"
#include "gls/psi.hpp"
#include "gls/quadrature.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"

using namespace gls;

TEST_CASE("degenerate psi returns |f|_r through the same path") {
  const FunctionSource f = src_cosx();
  const double direct = LpEvaluator(f, {})(2.5).value;
  const double via = gls_norm(norm_input(f, {}), make_degenerate_psi(2.5), {})
                         .value;
  CHECK(via == direct);  // bitwise: same evaluator route
}

TEST_CASE("sup over p with a known maximizer") {
  // |1|_p = 1, psi = p^{1/2}: sup 1/sqrt(p) on (1, inf) -> 1 at p -> 1.
  const NormReport rep =
      gls_norm(norm_input(src_const1(), {}), make_exponent_psi(0.5), {});
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.argmax_p == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_FALSE(rep.unbounded);
}

TEST_CASE("homogeneity is exact") {
  FunctionSource f = src_cosx();
  const PsiFunction psi = make_exponent_psi(0.5);
  const double base = gls_norm(norm_input(f, {}), psi, {}).value;
  f.scale *= 2.0;
  CHECK(gls_norm(norm_input(f, {}), psi, {}).value == 2.0 * base);
}

TEST_CASE("unbounded verdict for genuinely unbounded ratios") {
  // |g_1|_p grows like p while psi = sqrt(p): the sup diverges.
  BudgetOptions opt;
  opt.series_terms = 100'000;
  const NormReport rep =
      gls_norm(norm_input(src_gm(1.0), opt), make_exponent_psi(0.5), opt);
  CHECK(rep.unbounded);
  CHECK(std::isinf(rep.value));
}

TEST_CASE("sequence norms flow through the same engine") {
  // a^{(2,0)} with the natural-power psi (2,8): finite and positive.
  const WeightedSequence seq = seq_power_log(2.0, 0.0);
  const NormReport rep =
      gls_norm(norm_input(seq), make_power_psi(2.0, 8.0, 0.5, 0.0), {});
  CHECK(std::isfinite(rep.value));
  CHECK(rep.value > 0.0);
}

TEST_CASE("fundamental function") {
  // phi(delta) = sup_p delta^{1/p} / sqrt(p); for delta = e^{-4} the
  // stationary point is p = 8 with value e^{-1/2} / sqrt(8).
  const NormReport rep =
      fundamental_function(make_exponent_psi(0.5), std::exp(-4.0), {});
  CHECK(rep.value ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(8.0)).epsilon(1e-4));
  CHECK(rep.argmax_p == doctest::Approx(8.0).epsilon(1e-2));
}

TEST_CASE("order-continuous part membership") {
  // |cos|_p is bounded while psi grows: the ratio vanishes -> member.
  const TrendReport in =
      g0_membership(norm_input(src_cosx(), {}), make_exponent_psi(0.5));
  CHECK(in.verdict == Trend::vanishes);
  // |1|_p / 1 stays at 1 -> persists.
  const TrendReport out =
      g0_membership(norm_input(src_const1(), {}), make_exponent_psi(0.0));
  CHECK(out.verdict == Trend::persists);
}

TEST_CASE("psi dominance") {
  // p^{1/2} / p -> 0: embeds into the order-continuous part.
  const TrendReport t =
      psi_dominance(make_exponent_psi(0.5), make_exponent_psi(1.0));
  CHECK(t.verdict == Trend::vanishes);
  const TrendReport s =
      psi_dominance(make_exponent_psi(0.5), make_exponent_psi(0.5));
  CHECK(s.verdict == Trend::persists);
}
