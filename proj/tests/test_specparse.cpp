#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "gls/common.hpp"
#include "gls/sequence.hpp"
#include "gls/space.hpp"
#include "gls/specparse.hpp"

using namespace gls;

TEST_CASE("psi specs") {
  const PsiFunction pw = parse_psi("power:1,8,0.5,0");
  CHECK(pw.support().first == doctest::Approx(1.0));
  CHECK(pw.support().second == doctest::Approx(8.0));
  CHECK(pw.eval(2.0) > 0.0);

  const PsiFunction ex = parse_psi("exp:0.5");
  CHECK(ex.eval(4.0) == doctest::Approx(2.0).epsilon(1e-15));  // p^{1/2}

  const PsiFunction dg = parse_psi("degenerate:2.5");
  CHECK(dg.is_degenerate());
  CHECK(dg.degenerate_r() == 2.5);

  const PsiFunction gab = parse_psi("gab:2,6,1,1");
  CHECK(gab.support().first == doctest::Approx(2.0));
  CHECK(gab.support().second == doctest::Approx(6.0));

  CHECK_THROWS_AS(parse_psi("power:1,8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi("nope:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi("exp:abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi("exp:0.5trailing"), std::invalid_argument);
}

TEST_CASE("natural psi specs") {
  // From a source: usable nodes only where the Lp norm is finite.
  const PsiFunction nat = parse_psi("natural:torus:cosx");
  const auto sup = nat.support();
  CHECK(sup.first >= 1.0);
  CHECK(sup.second <= 8.0 + 1e-9);
  CHECK(std::isfinite(nat.eval(0.5 * (sup.first + sup.second))));

  // From a sequence.
  const PsiFunction nat_seq = parse_psi("natural:seq:harmonic");
  CHECK(std::isfinite(nat_seq.eval(3.0)));
  CHECK(nat_seq.eval(3.0) > 0.0);
}

TEST_CASE("source specs") {
  const FunctionSource c1 = parse_source("torus:const1");
  CHECK(c1.domain == Domain::torus);
  CHECK(c1.eval(1.0) == 1.0);

  const FunctionSource gd = parse_source("torus:gdelta_sin:Delta=2,terms=500");
  CHECK(gd.family == "gdelta");
  CHECK(gd.family_params[0] == 2.0);

  const FunctionSource gm = parse_source("torus:gm:m=2");
  CHECK(gm.domain == Domain::torus);

  const FunctionSource fab = parse_source("line:fab:a=2,b=4");
  CHECK(fab.domain == Domain::line);
  CHECK(fab.eval(4.0) == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(parse_source("line:gaussian").domain == Domain::line);
  CHECK(parse_source("line:indicator01").eval(0.5) == 1.0);

  CHECK_THROWS_AS(parse_source("torus:nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_source("plane:gaussian"), std::invalid_argument);
  CHECK_THROWS_AS(parse_source("torus:gdelta_sin"), std::invalid_argument);
  CHECK_THROWS_AS(parse_source("torus:gdelta_sin:Delta=2,Delta=3"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_source("torus:gm:mm=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_source("line:fab:a=2,b=4:extra"),
                  std::invalid_argument);
}

TEST_CASE("sequence specs") {
  const WeightedSequence pl = parse_sequence("seq:power_log:L=2,q=0");
  CHECK(pl.coeff(4) == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(parse_sequence("seq:harmonic").coeff(10) ==
        doctest::Approx(0.1).epsilon(1e-15));
  CHECK(parse_sequence("seq:unit").coeff(1) == 1.0);
  CHECK(parse_sequence("seq:unit:k=3").coeff(3) == 1.0);
  CHECK(parse_sequence("seq:unit:k=3").coeff(2) == 0.0);

  const WeightedSequence le = parse_sequence("seq:leindler:s=2,theta=1,n=50");
  CHECK(le.truncation == 50);

  const WeightedSequence wab = parse_sequence("seq:weighted_ab:b=3,Delta=1");
  CHECK(wab.coeff(5) == 5.0);

  CHECK(is_sequence_spec("seq:harmonic"));
  CHECK_FALSE(is_sequence_spec("torus:cosx"));

  CHECK_THROWS_AS(parse_sequence("seq:nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("seq:unit:k=0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("seq:unit:k=2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("seq:power_log:L=2"), std::invalid_argument);
}

TEST_CASE("custom sequence from csv") {
  const std::string path = "specparse_custom_seq.csv";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "3.0, 1.5\n";
    out << "\n";
    out << "0.5\n";
  }
  const WeightedSequence c = parse_sequence("seq:custom:" + path);
  CHECK(c.coeff(1) == 3.0);
  CHECK(c.coeff(2) == 1.5);
  CHECK(c.coeff(3) == 0.5);
  CHECK(c.coeff(4) == 0.0);
  CHECK(lp_sequence(c, 1.0).value == doctest::Approx(5.0).epsilon(1e-15));
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_sequence("seq:custom:/no/such/file.csv"),
                  std::invalid_argument);
}

TEST_CASE("grids") {
  const std::vector<double> csv = parse_grid("1.5,2,4");
  REQUIRE(csv.size() == 3);
  CHECK(csv[1] == 2.0);

  const std::vector<double> lin = parse_grid("lin:1,3,5");
  REQUIRE(lin.size() == 5);
  CHECK(lin[0] == 1.0);
  CHECK(lin[2] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lin[4] == 3.0);

  const std::vector<double> lg = parse_grid("log:1,16,5");
  REQUIRE(lg.size() == 5);
  CHECK(lg[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lg[2] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(lg[4] == doctest::Approx(16.0).epsilon(1e-12));

  CHECK(parse_grid("lin:2,9,1") == std::vector<double>{2.0});

  CHECK_THROWS_AS(parse_grid("lin:1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("lin:1,3,2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("log:-1,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1,two,3"), std::invalid_argument);
}

TEST_CASE("bound check kinds") {
  CHECK(parse_bound_check_kind("hilbert_lp") == BoundCheckKind::hilbert_lp);
  CHECK(parse_bound_check_kind("hilbert_gls") == BoundCheckKind::hilbert_gls);
  CHECK(parse_bound_check_kind("riesz_sM") == BoundCheckKind::riesz_sM);
  CHECK(parse_bound_check_kind("maximal_s_shape") ==
        BoundCheckKind::maximal_s_shape);
  CHECK(parse_bound_check_kind("paley") == BoundCheckKind::paley);
  CHECK(parse_bound_check_kind("hy_discrete") == BoundCheckKind::hy_discrete);
  CHECK(parse_bound_check_kind("hy_line") == BoundCheckKind::hy_line);
  CHECK(parse_bound_check_kind("leindler_T") == BoundCheckKind::leindler_T);
  CHECK(parse_bound_check_kind("leindler_U") == BoundCheckKind::leindler_U);
  CHECK(parse_bound_check_kind("theorem_gamma") ==
        BoundCheckKind::theorem_gamma);
  CHECK_THROWS_AS(parse_bound_check_kind("bogus"), std::invalid_argument);
}
