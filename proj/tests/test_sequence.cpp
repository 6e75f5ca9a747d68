#include <cmath>
#include <vector>

#include "doctest.h"
#include "gls/sequence.hpp"

using namespace gls;

TEST_CASE("registry families evaluate their closed forms") {
  const WeightedSequence a20 = seq_power_log(2.0, 0.0);
  CHECK(a20.coeff(4.0) == doctest::Approx(0.5).epsilon(1e-15));  // 4^{-1/2}

  const WeightedSequence a11 = seq_power_log(1.0, 1.0);
  CHECK(a11.coeff(10.0) ==
        doctest::Approx(std::log(10.0) / 10.0).epsilon(1e-15));

  const WeightedSequence h = seq_harmonic();
  CHECK(h.coeff(7.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

  const WeightedSequence w = seq_weighted_ab(3.0, 1.0);
  CHECK(w.coeff(5.0) == doctest::Approx(5.0).epsilon(1e-15));  // a(k) = k
  CHECK(w.weight(5.0) ==
        doctest::Approx(std::pow(5.0, -4.0) * std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("lp_sequence closed forms") {
  // |harmonic|_2 = sqrt(pi^2/6).
  CHECK(lp_sequence(seq_harmonic(), 2.0).value ==
        doctest::Approx(M_PI / std::sqrt(6.0)).epsilon(1e-10));
  // Unit vector: 1 at every p.
  for (double p : {1.0, 2.0, 17.0}) {
    CHECK(lp_sequence(seq_unit(1), p).value == doctest::Approx(1.0));
  }
  // Divergence at the critical exponent is reported, not silently truncated.
  CHECK(lp_sequence(seq_harmonic(), 1.0).divergent);
  CHECK_FALSE(lp_sequence(seq_harmonic(), 1.0).finite());
}

TEST_CASE("lp_sequence variants") {
  // nu variant weights by n^{p-2}: for the unit vector at n=1 all variants
  // coincide.
  const WeightedSequence e1 = seq_unit(1);
  for (auto v : {SeqVariant::plain, SeqVariant::nu, SeqVariant::beta}) {
    CHECK(lp_sequence(e1, 3.0, v).value == doctest::Approx(1.0));
  }
  // beta variant == plain when all weights are 1.
  const WeightedSequence h = seq_harmonic();
  CHECK(lp_sequence(h, 2.5, SeqVariant::beta).value ==
        doctest::Approx(lp_sequence(h, 2.5, SeqVariant::plain).value)
            .epsilon(1e-14));
}

TEST_CASE("scale homogeneity is exact") {
  WeightedSequence h = seq_harmonic();
  const double base = lp_sequence(h, 2.0).value;
  h.scale *= 2.0;
  CHECK(lp_sequence(h, 2.0).value == 2.0 * base);
}

TEST_CASE("tail measures") {
  // mu_beta{ n : |c(n)| > u } for the harmonic sequence: c(n) > u iff
  // n < 1/u, all weights 1.
  CHECK(sequence_tail_measure(seq_harmonic(), 0.35).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sequence_tail_measure(seq_unit(1), 0.5).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sequence_tail_measure(seq_unit(1), 1.5).value == 0.0);
}

TEST_CASE("leindler transforms keep the p-bound") {
  const WeightedSequence x = seq_leindler_corpus(2.0, 1.0, 2000);
  const WeightedSequence tx = leindler_apply(x, LeindlerOp::T);
  const WeightedSequence ux = leindler_apply(x, LeindlerOp::U);
  for (double p : {1.5, 3.0}) {
    const double nx = lp_sequence(x, p, SeqVariant::beta).value;
    CHECK(lp_sequence(tx, p, SeqVariant::beta).value <=
          p * nx * (1.0 + 1e-12));
    CHECK(lp_sequence(ux, p, SeqVariant::beta).value <=
          p * nx * (1.0 + 1e-12));
  }
}

TEST_CASE("dense sequences") {
  const WeightedSequence d = seq_dense({3.0, 1.0, 0.5});
  CHECK(d.coeff(1.0) == 3.0);
  CHECK(d.coeff(3.0) == 0.5);
  CHECK(lp_sequence(d, 1.0).value == doctest::Approx(4.5).epsilon(1e-15));
  // Ends after the stored values.
  CHECK(sequence_tail_measure(d, 0.4).value == 3.0);
  CHECK(sequence_tail_measure(d, 2.0).value == 1.0);
}
