#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalg/spectrum.hpp"

using namespace qalg;

namespace {

ModelParams half_params() {
  return ModelParams::rational(1, 1, Rat(1, 2), Rat(1, 2), Rat(1, 2));
}

ParamRat S(Sym s, int k = 1) { return ParamRat::symbol(s, k); }

}  // namespace

TEST_CASE("lowest levels at mu_i = 1/2") {
  ModelParams p = half_params();
  CHECK(energy_level(0).evaluate(p.values) == GaussRat(Rat(-1, 32)));
  CHECK(energy_level(1).evaluate(p.values) == GaussRat(Rat(-1, 50)));
  CHECK(energy_level(2).evaluate(p.values) == GaussRat(Rat(-1, 72)));
}

TEST_CASE("ground level at mu_i = 3/2") {
  ModelParams p = ModelParams::rational(1, 1, Rat(3, 2), Rat(3, 2), Rat(3, 2));
  CHECK(energy_level(0).evaluate(p.values) == GaussRat(Rat(-1, 98)));
}

TEST_CASE("eigenvalue ladders agree with the quadratic-algebra ladder formula") {
  // (A2, B2): u = (1 + mu1 + mu2)/2
  ParamRat u2 = (ParamRat(1) + S(Sym::Mu1) + S(Sym::Mu2)) * ParamRat(Rat(1, 2));
  // (A1, B1): u = v = (2 + mu1 + mu2 + mu3)/2
  ParamRat v = (ParamRat(2) + S(Sym::Mu1) + S(Sym::Mu2) + S(Sym::Mu3)) *
               ParamRat(Rat(1, 2));
  for (int k = 0; k <= 3; ++k) {
    CHECK(a2_eigenvalue(k) == ladder_value(coeffs_a2b2(), u2, k));
    CHECK(a1_eigenvalue(k) == ladder_value(coeffs_a1b1(), v, k));
  }
}

TEST_CASE("energy levels equal the representation-solver roots") {
  // at the upper boundary t = u + p + 1 with u = v + m, the two E-linear
  // factors of the six-factor catalog vanish exactly at E(2p+2m) and
  // E(2p+2m+1)
  for (int m = 0; m <= 2; ++m)
    for (int p = 0; p <= 2; ++p) {
      FactorCatalog cat = six_factor_catalog_a1b1(m);
      ParamRat v = (ParamRat(2) + S(Sym::Mu1) + S(Sym::Mu2) + S(Sym::Mu3)) *
                   ParamRat(Rat(1, 2));
      std::map<Sym, GaussRat> vals{{Sym::Hbar, GaussRat(1)},
                                   {Sym::Mu, GaussRat(1)},
                                   {Sym::Mu1, GaussRat(Rat(1, 3))},
                                   {Sym::Mu2, GaussRat(Rat(1, 5))},
                                   {Sym::Mu3, GaussRat(Rat(1, 7))}};
      auto at = vals;
      at[Sym::T] = v.evaluate(vals) + GaussRat(m + p + 1);
      // factors 4 and 5 are the E-linear ones
      for (int which : {4, 5}) {
        int n = 2 * p + 2 * m + (which == 4 ? 0 : 1);
        auto e = at;
        e[Sym::En] = energy_level(n).evaluate(vals);
        CHECK(cat.factors[which].evaluate(e).is_zero());
      }
    }
}

TEST_CASE("levels are negative, increasing, and accumulate at zero") {
  ModelParams p = ModelParams::rational(1, Rat(7, 3), Rat(1, 3), Rat(2, 5), Rat(4, 7));
  Rat prev(-1000);
  bool first = true;
  for (int n = 0; n <= 12; ++n) {
    GaussRat e = energy_level(n).evaluate(p.values);
    REQUIRE(e.is_real());
    CHECK(e.re < 0);
    if (!first) CHECK(e.re > prev);
    prev = e.re;
    first = false;
  }
}

TEST_CASE("energy scales as the square of the Coulomb strength") {
  ModelParams p1 = ModelParams::rational(1, 1, Rat(1, 3), Rat(2, 5), Rat(4, 7));
  ModelParams p2 = ModelParams::rational(1, 2, Rat(1, 3), Rat(2, 5), Rat(4, 7));
  for (int n = 0; n <= 4; ++n)
    CHECK(energy_level(n).evaluate(p2.values) ==
          energy_level(n).evaluate(p1.values) * GaussRat(4));
}

TEST_CASE("mu_i = 1/2 embeds into the hydrogen sequence with N = n + 4") {
  ModelParams p = half_params();
  for (int n = 0; n <= 6; ++n) {
    int N = n + 4;
    CHECK(energy_level(n).evaluate(p.values) ==
          GaussRat(Rat(-1) / Rat(2 * N * N)));
  }
}

TEST_CASE("spectrum table layout and emission") {
  SpectrumTable t = spectrum_table(3, half_params());
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].branch == "even");
  CHECK(t.rows[1].branch == "odd");
  CHECK(t.rows[1].q == 0);
  CHECK(t.rows[2].q == 1);
  CHECK(t.rows[0].E == Rat(-1, 32));
  CHECK(t.rows[0].p + t.rows[0].m == t.rows[0].q);

  std::string csv = spectrum_csv(t);
  CHECK(csv.rfind("n,branch,q,a2,a1,E,", 0) == 0);
  CHECK(csv.find("0,even,0,") != std::string::npos);
  CHECK(csv.find("-1/32") != std::string::npos);
  CHECK(csv.find("-0.03125") != std::string::npos);

  Json j = spectrum_json(t);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["E"] == "-1/32");
  CHECK(j[3]["branch"] == "odd");
  // byte-identical across repeated emission
  CHECK(json_str(j) == json_str(spectrum_json(spectrum_table(3, half_params()))));
}

TEST_CASE("spectrum table rejects unusable parameters") {
  CHECK_THROWS_AS(spectrum_table(2, ModelParams::symbolic()),
                  std::invalid_argument);
  ModelParams repulsive =
      ModelParams::rational(1, -1, Rat(1, 2), Rat(1, 2), Rat(1, 2));
  CHECK_THROWS_AS(spectrum_table(2, repulsive), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_table(-1, half_params()), std::invalid_argument);
  CHECK_THROWS_AS(energy_level(-1), std::invalid_argument);
}
