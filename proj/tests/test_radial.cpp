#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qalg/radial.hpp"

using namespace qalg;

TEST_CASE("pure Coulomb levels (J = 0) match -1/(2N^2)") {
  RadialProblem rp;  // hbar = mu = 1
  rp.grid = 4000;
  CHECK(std::abs(radial_eigenvalue(rp, 0) - (-0.5)) < 1e-5);
  CHECK(std::abs(radial_eigenvalue(rp, 1) - (-0.125)) < 1e-5);
}

TEST_CASE("J = 3 sector reproduces the lowest model levels at mu_i = 1/2") {
  RadialProblem rp;
  rp.J = 3.0;
  rp.grid = 6000;
  CHECK(std::abs(radial_eigenvalue(rp, 0) - (-1.0 / 32)) < 1e-3 / 32);
  CHECK(std::abs(radial_eigenvalue(rp, 1) - (-1.0 / 50)) < 1e-3 / 50);
  CHECK(std::abs(radial_eigenvalue(rp, 2) - (-1.0 / 72)) < 1e-3 / 72);
}

TEST_CASE("grid refinement converges at second order") {
  RadialProblem rp;
  double exact = -0.5;
  double r_max = 160.0;
  double coarse = radial_eigenvalue_on_grid(rp, 0, 1000, r_max);
  double fine = radial_eigenvalue_on_grid(rp, 0, 2001, r_max);
  double e_coarse = std::abs(coarse - exact);
  double e_fine = std::abs(fine - exact);
  CHECK(e_fine < e_coarse);
  // halving h should cut the error by about 4
  CHECK(e_coarse / e_fine > 2.5);
  CHECK(e_coarse / e_fine < 6.0);
}

TEST_CASE("energies scale as the square of the Coulomb strength") {
  RadialProblem weak, strong;
  weak.grid = strong.grid = 4000;
  strong.mu = 2.0;
  double e1 = radial_eigenvalue(weak, 0);
  double e4 = radial_eigenvalue(strong, 0);
  CHECK(std::abs(e4 - 4.0 * e1) < 1e-4);
}

TEST_CASE("oracle validates the algebraic table at mu_i = 1/2") {
  SpectrumTable t = spectrum_table(
      2, ModelParams::rational(1, 1, Rat(1, 2), Rat(1, 2), Rat(1, 2)));
  CompareReport rep = compare_spectra(t);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& r : rep.rows) {
    INFO("n=", r.n);
    CHECK(r.rel_diff <= 1e-3);
    CHECK(r.grid_n <= 20000);
  }
  CHECK(rep.pass());
  CHECK(rep.rows[0].E_exact == "-1/32");
  CHECK(rep.rows[1].E_exact == "-1/50");
  CHECK(rep.rows[2].E_exact == "-1/72");

  Json j = compare_json(rep);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["n"] == 0);
  CHECK(j[0]["grid"].contains("N"));
  CHECK(j[0]["grid"].contains("r_max"));
  CHECK(j[0]["rel_diff"].get<double>() <= 1e-3);
}

TEST_CASE("oracle validates the shifted ground level at mu_i = 3/2") {
  SpectrumTable t = spectrum_table(
      0, ModelParams::rational(1, 1, Rat(3, 2), Rat(3, 2), Rat(3, 2)));
  CompareReport rep = compare_spectra(t);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].E_exact == "-1/98");
  CHECK(rep.pass());
}

TEST_CASE("bad radial setups are rejected") {
  RadialProblem rp;
  CHECK_THROWS_AS(radial_eigenvalue_on_grid(rp, 0, 30000, 100.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(radial_eigenvalue_on_grid(rp, -1, 100, 100.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(radial_eigenvalue_on_grid(rp, 0, 100, -1.0),
                  std::invalid_argument);
  rp.grid = 15000;
  CHECK_THROWS_AS(radial_eigenvalue(rp, 0), std::invalid_argument);
}
