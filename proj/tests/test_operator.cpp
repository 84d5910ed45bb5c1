#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qalg/operator.hpp"

using namespace qalg;

namespace {

ParamRat ih() {  // i*hbar
  return ParamRat(ParamPoly::symbol(Sym::Hbar).scaled(GaussRat::i()));
}

OperatorExpr mult_coord(int axis) {
  return OperatorExpr::multiplication(
      SpatialCoeff::polynomial(SpatialPoly::coordinate(axis)));
}

OperatorExpr momentum(int axis) {  // -i hbar d/daxis
  return OperatorExpr::partial(axis).scaled(-ih());
}

OperatorExpr angular(int k) {
  // J1 = i hbar (z dy - y dz), J2 = i hbar (x dz - z dx),
  // J3 = i hbar (y dx - x dy)
  int a = (k + 1) % 3, b = (k + 2) % 3;  // J_k = i hbar (x_b d_a - x_a d_b)
  OperatorExpr f;
  f += compose(mult_coord(b), OperatorExpr::partial(a));
  f -= compose(mult_coord(a), OperatorExpr::partial(b));
  return f.scaled(ih());
}

SpatialCoeff r_over_s() {
  return SpatialCoeff::make(ParamRat(1), smono(0, 0, 0), 1, {0, 0, 0, 1});
}

// random low-degree operator for the property suites
OperatorExpr random_op(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), dord(0, 2), mexp(0, 2),
      coef(-4, 4), rpow(0, 1), denp(0, 1);
  OperatorExpr f;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    DMono d = dmono(dord(rng), dord(rng), dord(rng));
    int c = coef(rng);
    if (c == 0) c = 1;
    SpatialCoeff sc = SpatialCoeff::make(
        ParamRat(c), smono(mexp(rng), mexp(rng), mexp(rng)), rpow(rng),
        {denp(rng), 0, denp(rng), denp(rng)});
    f.add_term(d, sc);
  }
  return f;
}

}  // namespace

TEST_CASE("spatial coefficient ring with r^2 = x^2+y^2+z^2") {
  // r * r == s as coefficients
  SpatialCoeff r = SpatialCoeff::make(ParamRat(1), smono(0, 0, 0), 1, {0, 0, 0, 0});
  SpatialCoeff rr = r * r;
  CHECK(rr == SpatialCoeff::polynomial(SpatialPoly::s()));

  // 1/r is stored as r/s and squares to 1/s
  SpatialCoeff inv_r = r_over_s();
  CHECK(inv_r * r == SpatialCoeff::constant(ParamRat(1)));

  // reduction cancels common monomials and s factors
  SpatialCoeff u = SpatialCoeff::make(ParamRat(1), smono(3, 1, 0), 0, {2, 1, 0, 0});
  CHECK(u == SpatialCoeff::polynomial(SpatialPoly::coordinate(0)));
  SpatialCoeff v(SpatialPoly::s() * SpatialPoly::coordinate(1), SpatialPoly(),
                 {0, 0, 0, 2});
  CHECK(v.den() == std::array<int, 4>{0, 0, 0, 1});
}

TEST_CASE("r-reduction soundness (randomized)") {
  std::mt19937 rng(7);
  SpatialCoeff r = SpatialCoeff::make(ParamRat(1), smono(0, 0, 0), 1, {0, 0, 0, 0});
  SpatialCoeff s = SpatialCoeff::polynomial(SpatialPoly::s());
  std::uniform_int_distribution<int> mexp(0, 2), coef(-3, 3), rpow(0, 1), denp(0, 1);
  for (int i = 0; i < 50; ++i) {
    SpatialCoeff c = SpatialCoeff::make(
        ParamRat(coef(rng) * 2 + 1), smono(mexp(rng), mexp(rng), mexp(rng)),
        rpow(rng), {denp(rng), denp(rng), 0, denp(rng)});
    CHECK(c * r * r == c * s);
  }
}

TEST_CASE("compose: spec examples") {
  // dx o x = x dx + 1
  OperatorExpr dx = OperatorExpr::partial(0);
  OperatorExpr x = mult_coord(0);
  OperatorExpr lhs = compose(dx, x);
  OperatorExpr expect = compose(x, dx) + OperatorExpr::identity();
  CHECK(lhs == expect);

  // dx o r = r dx + x r/(x^2+y^2+z^2)
  OperatorExpr r_op = OperatorExpr::multiplication(
      SpatialCoeff::make(ParamRat(1), smono(0, 0, 0), 1, {0, 0, 0, 0}));
  OperatorExpr lhs2 = compose(dx, r_op);
  OperatorExpr expect2 = compose(r_op, dx) + OperatorExpr::multiplication(
      SpatialCoeff::make(ParamRat(1), smono(1, 0, 0), 1, {0, 0, 0, 1}));
  CHECK(lhs2 == expect2);

  // p_x o p_y = -hbar^2 dx dy
  OperatorExpr pxpy = compose(momentum(0), momentum(1));
  OperatorExpr expect3;
  expect3.add_term(dmono(1, 1, 0), SpatialCoeff::constant(
      ParamRat(-ParamPoly::symbol(Sym::Hbar, 2))));
  CHECK(pxpy == expect3);
}

TEST_CASE("commutators: spec examples") {
  // [p_x, x] = -i hbar
  OperatorExpr c = commutator(momentum(0), mult_coord(0));
  OperatorExpr expect = OperatorExpr::scalar(-ih());
  CHECK(c == expect);

  // [J1, J2] = i hbar J3
  OperatorExpr j12 = commutator(angular(0), angular(1));
  CHECK(j12 == angular(2).scaled(ih()));

  // {x, p_x} = 2 x p_x - i hbar
  OperatorExpr anti = anticommutator(mult_coord(0), momentum(0));
  OperatorExpr expect2 =
      compose(mult_coord(0), momentum(0)).scaled(ParamRat(2)) +
      OperatorExpr::scalar(-ih());
  CHECK(anti == expect2);
}

TEST_CASE("apply: spec examples") {
  // dx applied to x^2 -> 2x
  SpatialCoeff x2 = SpatialCoeff::make(ParamRat(1), smono(2, 0, 0), 0, {0, 0, 0, 0});
  SpatialCoeff img = apply(OperatorExpr::partial(0), x2);
  CHECK(img == SpatialCoeff::make(ParamRat(2), smono(1, 0, 0), 0, {0, 0, 0, 0}));

  // J3 applied to x -> i hbar y
  SpatialCoeff xm = SpatialCoeff::make(ParamRat(1), smono(1, 0, 0), 0, {0, 0, 0, 0});
  SpatialCoeff j3x = apply(angular(2), xm);
  CHECK(j3x == SpatialCoeff::make(ih(), smono(0, 1, 0), 0, {0, 0, 0, 0}));

  // dx applied to r -> x r / (x^2+y^2+z^2)
  SpatialCoeff r = SpatialCoeff::make(ParamRat(1), smono(0, 0, 0), 1, {0, 0, 0, 0});
  CHECK(apply(OperatorExpr::partial(0), r) ==
        SpatialCoeff::make(ParamRat(1), smono(1, 0, 0), 1, {0, 0, 0, 1}));
}

TEST_CASE("associativity of compose (randomized)") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    OperatorExpr f = random_op(rng), g = random_op(rng), h = random_op(rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("jacobi identity (randomized)") {
  std::mt19937 rng(4711);
  for (int i = 0; i < 100; ++i) {
    OperatorExpr f = random_op(rng), g = random_op(rng), h = random_op(rng);
    OperatorExpr j = commutator(f, commutator(g, h)) +
                     commutator(g, commutator(h, f)) +
                     commutator(h, commutator(f, g));
    CHECK(j.is_zero());
  }
}

TEST_CASE("apply-consistency (randomized)") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> mexp(0, 2), rpow(0, 1);
  for (int i = 0; i < 60; ++i) {
    OperatorExpr f = random_op(rng), g = random_op(rng);
    SpatialCoeff t = SpatialCoeff::make(
        ParamRat(1), smono(mexp(rng), mexp(rng), mexp(rng)), rpow(rng),
        {0, 0, 0, 0});
    CHECK(apply(compose(f, g), t) == apply(f, apply(g, t)));
  }
}

TEST_CASE("operator substitution commutes with compose") {
  std::mt19937 rng(55);
  std::map<Sym, GaussRat> bind{{Sym::Hbar, GaussRat(Rat(3, 2))}};
  for (int i = 0; i < 30; ++i) {
    OperatorExpr f = random_op(rng).scaled(ParamRat(ParamPoly::symbol(Sym::Hbar)));
    OperatorExpr g = random_op(rng);
    CHECK(compose(f, g).substitute(bind) ==
          compose(f.substitute(bind), g.substitute(bind)));
  }
}
