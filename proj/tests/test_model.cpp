#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalg/model.hpp"

using namespace qalg;

TEST_CASE("H at mu_i = 1/2 is the pure Coulomb Hamiltonian") {
  ModelParams p;
  p.values = {{Sym::Mu1, GaussRat(Rat(1, 2))},
              {Sym::Mu2, GaussRat(Rat(1, 2))},
              {Sym::Mu3, GaussRat(Rat(1, 2))}};
  OperatorExpr H = build_operator(IntegralName::H, p);

  ParamRat h2 = ParamRat::symbol(Sym::Hbar, 2);
  OperatorExpr expect =
      (OperatorExpr::partial(0, 2) + OperatorExpr::partial(1, 2) +
       OperatorExpr::partial(2, 2))
          .scaled(h2 / ParamRat(-2));
  expect += OperatorExpr::multiplication(SpatialCoeff::make(
      -h2 * ParamRat::symbol(Sym::Mu), smono(0, 0, 0), 1, {0, 0, 0, 1}));
  CHECK(H == expect);
}

TEST_CASE("A1 minus half the total angular momentum is a multiplication operator") {
  ModelParams p = ModelParams::symbolic();
  OperatorExpr A1 = build_operator(IntegralName::A1, p);
  OperatorExpr half_j2 =
      build_operator(IntegralName::TotalJ, p).scaled(ParamRat(Rat(1, 2)));
  OperatorExpr diff = A1 - half_j2;
  CHECK(diff.degree() == 0);
  // homogeneous of degree 0 in (x,y,z): each term has numerator degree equal
  // to denominator degree
  for (const auto& [d, c] : diff.terms()) {
    int den_deg = c.den()[0] + c.den()[1] + c.den()[2] + 2 * c.den()[3];
    for (const auto& [m, coef] : c.a().terms()) {
      int num_deg = smono_exp(m, 0) + smono_exp(m, 1) + smono_exp(m, 2);
      CHECK(num_deg == den_deg);
    }
    CHECK(c.b().is_zero());
  }
}

TEST_CASE("derivative degrees of the integrals") {
  ModelParams p = ModelParams::symbolic();
  CHECK(build_operator(IntegralName::H, p).degree() == 2);
  CHECK(build_operator(IntegralName::A1, p).degree() == 2);
  CHECK(build_operator(IntegralName::A2, p).degree() == 2);
  CHECK(build_operator(IntegralName::B2, p).degree() == 2);
  CHECK(build_operator(IntegralName::B1, p).degree() == 4);
  CHECK(build_operator(IntegralName::F, p).degree() == 4);
}

TEST_CASE("build then substitute equals substitute then build") {
  ModelParams sym = ModelParams::symbolic();
  ModelParams num = ModelParams::rational(1, Rat(2, 5), Rat(3, 4), Rat(5, 7), Rat(9, 5));
  std::map<Sym, GaussRat> bind = num.values;
  for (auto name : {IntegralName::H, IntegralName::A1, IntegralName::A2,
                    IntegralName::B2, IntegralName::B1, IntegralName::F}) {
    CHECK(build_operator(name, sym).substitute(bind) ==
          build_operator(name, num));
  }
}

TEST_CASE("zero-commutation suite, fully symbolic") {
  ZeroSuiteReport rep = verify_zero_suite(ModelParams::symbolic());
  CHECK(rep.entries.size() == 10);
  for (const auto& e : rep.entries) {
    INFO(e.label);
    CHECK(e.is_zero);
  }
  CHECK(rep.all_zero);
  // the printed mu1 trailing term does NOT commute; the mu3 variant does
  CHECK_FALSE(rep.b1_printed_variant_commutes);
  CHECK(rep.b1_symmetric_variant_commutes);
  CHECK(rep.b1_selected == B1Variant::SymmetricMu3);
}
