#include <cmath>
#include <vector>

#include "doctest.h"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/special.hpp"

using namespace gls;

TEST_CASE("power psi") {
  const PsiFunction psi = make_power_psi(1.2, 6.0, 1.0, 1.0);
  CHECK(psi.support().a == 1.2);
  CHECK(psi.support().b == 6.0);
  // (p-A)^{-1} (B-p)^{-1} at p = 2.
  CHECK(psi.eval(2.0) == doctest::Approx(1.0 / (0.8 * 4.0)).epsilon(1e-15));
  // Blows up toward both endpoints.
  CHECK(psi.eval(1.2 + 1e-9) > 1e8);
  CHECK(psi.eval(6.0 - 1e-9) > 1e8);
}

TEST_CASE("exponent psi") {
  const PsiFunction psi = make_exponent_psi(0.5);
  CHECK(psi.eval(4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(psi.support().a == 1.0);
  CHECK(std::isinf(psi.support().b));
  CHECK_FALSE(psi.is_degenerate());
}

TEST_CASE("degenerate psi") {
  const PsiFunction psi = make_degenerate_psi(2.5);
  CHECK(psi.is_degenerate());
  CHECK(psi.degenerate_r() == 2.5);
}

TEST_CASE("gab psi is continuous at its breakpoint") {
  const double a = 2.0, b = 4.0;
  const PsiFunction psi = make_gab_psi(a, b, 1.0, 1.0);
  const double h = std::min(0.5 * (a + b), 2.0 * a);  // = 3
  const double lo = psi.eval(h - 1e-9);
  const double hi = psi.eval(h + 1e-9);
  CHECK(lo == doctest::Approx(hi).epsilon(1e-6));
  CHECK(psi.support().a == a);
  CHECK(psi.support().b == b);
}

TEST_CASE("natural psi: chord above the curve, equality at nodes") {
  const WeightedSequence seq = seq_power_log(2.0, 0.0);
  auto lp = [&](double p) { return lp_sequence(seq, p); };
  const std::vector<double> grid = {2.5, 3.0, 4.0, 6.0};
  const PsiFunction psi = make_natural_psi(lp, grid, "a20");
  for (double p : grid) {
    CHECK(psi.eval(p) == doctest::Approx(lp(p).value).epsilon(1e-12));
  }
  // Between nodes the log-linear-in-1/p chord lies above the norm curve.
  for (double p : {2.7, 3.5, 5.0}) {
    CHECK(psi.eval(p) >= lp(p).value * (1.0 - 1e-12));
  }
  CHECK(psi.support().a == doctest::Approx(2.5));
  CHECK(psi.support().b == doctest::Approx(6.0));
}

TEST_CASE("psi transforms") {
  const PsiFunction base = make_exponent_psi(0.5);
  const PsiFunction h = transform_psi(base, PsiTransform::hilbert());
  CHECK(h.eval(3.0) ==
        doctest::Approx(pichorides(3.0) * base.eval(3.0)).epsilon(1e-14));

  const PsiFunction d = transform_psi(base, PsiTransform::degree(2.0));
  CHECK(d.eval(3.0) == doctest::Approx(9.0 * base.eval(3.0)).epsilon(1e-14));

  const PsiFunction l = transform_psi(base, PsiTransform::leindler());
  CHECK(l.eval(3.0) == doctest::Approx(3.0 * base.eval(3.0)).epsilon(1e-14));

  // conjugate_zeta maps support (A,B) to (B', A') with p -> p/(p-1) and is
  // involutive.
  const PsiFunction pw = make_power_psi(1.5, 3.0, 0.5, 0.5);
  const PsiFunction cz = transform_psi(pw, PsiTransform::conjugate_zeta());
  CHECK(cz.support().a == doctest::Approx(1.5).epsilon(1e-12));  // 3/(3-1)
  CHECK(cz.support().b == doctest::Approx(3.0).epsilon(1e-12));  // 1.5/0.5
  const PsiFunction back = transform_psi(cz, PsiTransform::conjugate_zeta());
  CHECK(back.eval(2.2) == doctest::Approx(pw.eval(2.2)).epsilon(1e-10));
}
