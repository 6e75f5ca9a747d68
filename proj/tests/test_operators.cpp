#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gls/common.hpp"
#include "gls/operators.hpp"
#include "gls/source.hpp"
#include "gls/trigpoly.hpp"

using namespace gls;

TEST_CASE("periodic conjugation in coefficient space") {
  TrigPolynomial f;
  f.a = {0, 0, 1.0};  // cos 3x
  f.b = {0, 0, 0};
  const TrigPolynomial h = hilbert_periodic(f);
  CHECK(h.b[2] == 1.0);  // -> sin 3x, exactly
  CHECK(h.a[2] == 0.0);
  const TrigPolynomial hh = hilbert_periodic(h);
  CHECK(hh.a[2] == -1.0);  // H H = -identity on mean-zero input
}

TEST_CASE("torus Fourier coefficients") {
  TrigPolynomial f;
  f.a = {0, 0, 1.0};
  f.b = {0, 0, 0};
  const FunctionSource s = src_poly(f, "cos3x");

  SUBCASE("trig route is exact by discrete orthogonality") {
    const TorusCoefficients c = fourier_torus(s, 5);
    CHECK(c.a[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.a[4] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(c.b[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  }

  SUBCASE("general quadrature route agrees") {
    FunctionSource g = s;
    g.trig_degree = -1;  // forget the polynomial structure
    const TorusCoefficients cq = fourier_torus(g, 5);
    CHECK(cq.a[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cq.c0 == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    g.scale = 3.0;
    const TorusCoefficients cs = fourier_torus(g, 3);
    CHECK(cs.a[2] == doctest::Approx(3.0).epsilon(1e-12));
  }

  SUBCASE("exact coefficient copy round trips") {
    const TorusCoefficients c = fourier_torus(f, 5);
    const TrigPolynomial back = c.poly();
    REQUIRE(back.degree() >= 3);
    CHECK(back.a[2] == 1.0);
  }
}

TEST_CASE("hilbert on sources") {
  TrigPolynomial cosp;
  cosp.a = {1.0};
  cosp.b = {0.0};
  const FunctionSource s = src_poly(cosp, "cosx");

  SUBCASE("coefficient route") {
    const FunctionSource hs = hilbert_periodic(s);
    CHECK(hs.scale * hs.eval(0.5) ==
          doctest::Approx(std::sin(0.5)).epsilon(1e-13));
  }

  SUBCASE("principal-value route") {
    const Estimate e = hilbert_periodic_pv(s, 0.7);
    CHECK(e.value == doctest::Approx(std::sin(0.7)).epsilon(1e-10));
  }

  SUBCASE("log-weighted family maps structurally") {
    const FunctionSource gs = src_gdelta(2.0, true, 200000);
    const FunctionSource hg = hilbert_periodic(gs);
    CHECK(hg.family == "gdelta");
    CHECK(hg.family_params[1] == 0.0);  // sine series -> cosine series
    CHECK(hg.scale == -1.0);
    const FunctionSource hhg = hilbert_periodic(hg);
    CHECK(hhg.scale == -1.0);  // H H = -identity
    CHECK(hhg.family_params[1] == 1.0);
  }
}

TEST_CASE("line hilbert transform of the indicator") {
  const FunctionSource f = src_indicator01();
  // pi H[1_(0,1)](x) = log|x/(x-1)|.
  CHECK(hilbert_line(f, 2.0).value ==
        doctest::Approx(std::log(2.0) / kPi).epsilon(1e-11));
  CHECK(hilbert_line(f, 0.5).value ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  for (const double x : {10.0, 100.0, 1000.0}) {
    CAPTURE(x);
    CHECK(kPi * x * hilbert_line(f, x).value ==
          doctest::Approx(x * std::log(x / (x - 1.0))).epsilon(1e-9));
  }
}

TEST_CASE("line fourier transform") {
  const FunctionSource g = src_gaussian();

  SUBCASE("gaussian eigenfunction values") {
    const FourierPoint F1 = fourier_line(g, 1.0, {}, 1e-10);
    CHECK(F1.re ==
          doctest::Approx(std::sqrt(kTwoPi) * std::exp(-0.5)).epsilon(1e-9));
    CHECK(F1.im == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    const FourierPoint F0 = fourier_line(g, 0.0, {}, 1e-10);
    CHECK(F0.re == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-9));
  }

  SUBCASE("log blow-up of the singular moment family") {
    const FourierPoint Fa = fourier_line(src_absinv(), 1e-4);
    CHECK(Fa.stabilized);
    CHECK(Fa.re / (2.0 * std::fabs(std::log(1e-4))) ==
          doctest::Approx(0.93733).epsilon(2e-4));
  }

  SUBCASE("plancherel identity") {
    const ParsevalReport pr = parseval_line(g);
    CHECK(pr.lhs == doctest::Approx(2.0 * kPi * std::sqrt(kPi)).epsilon(1e-8));
    CHECK(pr.rel_gap <= 1e-8);
  }
}

TEST_CASE("sharp and shape constants") {
  CHECK(sharp_constant(SharpConstantKind::pichorides, 4.0).value ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sharp_constant(SharpConstantKind::pichorides, 4.0 / 3.0).value ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sharp_constant(SharpConstantKind::hausdorff_young, 2.0).value ==
        doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-15));
  CHECK(sharp_constant(SharpConstantKind::gamma_weight, 1.5, 0.25).value ==
        doctest::Approx(6.4).epsilon(1e-14));  // 1/(gamma^2 (p0 - p))
  CHECK(sharp_constant(SharpConstantKind::maximal_s, 4.0).shape_only);
  CHECK_FALSE(sharp_constant(SharpConstantKind::pichorides, 3.0).shape_only);
  CHECK_THROWS_AS(sharp_constant(SharpConstantKind::pichorides, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sharp_constant(SharpConstantKind::gamma_weight, 5.0, 0.25),
                  std::invalid_argument);
  CHECK_THROWS_AS(sharp_constant(SharpConstantKind::hausdorff_young, 1.5),
                  std::invalid_argument);
}

TEST_CASE("gamma weight operator") {
  const WeightGamma w = weight_gamma_apply({1.0}, {}, 0.25);
  CHECK(gamma_norm(w, 2.0).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w.p0 == 4.0);

  CHECK_THROWS_AS(weight_gamma_apply({1.0, 2.0}, {}, 0.25),
                  std::invalid_argument);
  CHECK_THROWS_AS(weight_gamma_apply({1.0}, {}, 1.5), std::invalid_argument);

  TrigPolynomial cosp;
  cosp.a = {1.0};
  cosp.b = {0.0};
  const FunctionSource u = ugamma_source(src_poly(cosp, "cosx"), 0.5);
  CHECK(u.eval(1.0) == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("maximal operators") {
  TrigPolynomial cosp;
  cosp.a = {1.0};
  cosp.b = {0.0};
  const MaximalResult st = maximal_s_star(fourier_torus(cosp, 1));
  CHECK(st.fn.eval(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(st.fn.eval(kPi) == doctest::Approx(1.0).epsilon(1e-12));

  const MaximalResult Fs = maximal_F_star(src_indicator01(), {1.0, 4.0});
  CHECK(Fs.fn.eval(0.0) == doctest::Approx(1.0).epsilon(1e-10));

  const MaximalResult Rs = maximal_R_star(src_gaussian(), {1.0});
  CHECK(Rs.fn.eval(0.0) > 0.5);
}

TEST_CASE("classical bound checks aggregate") {
  BoundCheckConfig cfg;
  cfg.corpus_limit = 2;

  SUBCASE("hilbert lp") {
    const BoundCheckReport rep = bound_check(BoundCheckKind::hilbert_lp, cfg);
    CHECK(rep.aggregate_pass);
    CHECK_FALSE(rep.records.empty());
    for (const CheckRecord& r : rep.records) {
      CAPTURE(r.id);
      CHECK(r.pass);
      CHECK(r.lhs <= r.rhs * (1.0 + 1e-6));
    }
  }

  SUBCASE("partial sums") {
    cfg.m_grid = {4, 16};
    const BoundCheckReport rep = bound_check(BoundCheckKind::riesz_sM, cfg);
    CHECK(rep.aggregate_pass);
  }

  SUBCASE("discrete hausdorff-young") {
    const BoundCheckReport rep = bound_check(BoundCheckKind::hy_discrete, cfg);
    CHECK(rep.aggregate_pass);
  }

  SUBCASE("weighted blow-up order") {
    const BoundCheckReport rep =
        bound_check(BoundCheckKind::theorem_gamma, cfg);
    CHECK(rep.fit_exponent > 0.5);
    CHECK(rep.fit_exponent < 1.7);
  }
}
