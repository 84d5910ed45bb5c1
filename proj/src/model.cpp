#include "qalg/model.hpp"

#include <stdexcept>

namespace qalg {

ModelParams ModelParams::rational(const Rat& hbar, const Rat& mu,
                                  const Rat& mu1, const Rat& mu2,
                                  const Rat& mu3) {
  ModelParams p;
  p.values = {{Sym::Hbar, GaussRat(hbar)},
              {Sym::Mu, GaussRat(mu)},
              {Sym::Mu1, GaussRat(mu1)},
              {Sym::Mu2, GaussRat(mu2)},
              {Sym::Mu3, GaussRat(mu3)}};
  if (hbar == 0) throw std::invalid_argument("hbar must be nonzero");
  return p;
}

ParamRat ModelParams::param(Sym s) const {
  auto it = values.find(s);
  if (it != values.end()) return ParamRat(it->second);
  return ParamRat::symbol(s);
}

std::optional<IntegralName> integral_from_string(const std::string& s) {
  if (s == "H") return IntegralName::H;
  if (s == "A1") return IntegralName::A1;
  if (s == "A2") return IntegralName::A2;
  if (s == "B2") return IntegralName::B2;
  if (s == "B1") return IntegralName::B1;
  if (s == "F") return IntegralName::F;
  if (s == "J1") return IntegralName::J1;
  if (s == "J2") return IntegralName::J2;
  if (s == "J3") return IntegralName::J3;
  if (s == "TotalJ") return IntegralName::TotalJ;
  if (s == "px" || s == "Px") return IntegralName::Px;
  if (s == "py" || s == "Py") return IntegralName::Py;
  if (s == "pz" || s == "Pz") return IntegralName::Pz;
  return std::nullopt;
}

std::string integral_to_string(IntegralName n) {
  switch (n) {
    case IntegralName::H: return "H";
    case IntegralName::A1: return "A1";
    case IntegralName::A2: return "A2";
    case IntegralName::B2: return "B2";
    case IntegralName::B1: return "B1";
    case IntegralName::F: return "F";
    case IntegralName::J1: return "J1";
    case IntegralName::J2: return "J2";
    case IntegralName::J3: return "J3";
    case IntegralName::TotalJ: return "TotalJ";
    case IntegralName::Px: return "px";
    case IntegralName::Py: return "py";
    case IntegralName::Pz: return "pz";
  }
  return "?";
}

namespace {

struct Builder {
  const ModelParams& p;

  ParamRat hbar() const { return p.param(Sym::Hbar); }
  ParamRat hbar_pow(int n) const {
    ParamRat r(1);
    for (int i = 0; i < n; ++i) r *= hbar();
    return r;
  }
  // (4 mu_k^2 - 1)
  ParamRat mu_sq4m1(Sym s) const {
    ParamRat m = p.param(s);
    return m * m * ParamRat(4) - ParamRat(1);
  }
  // centrifugal strength c_k = hbar^2 (4 mu_k^2 - 1)/8
  ParamRat c_k(Sym s) const {
    return hbar_pow(2) * mu_sq4m1(s) / ParamRat(8);
  }

  OperatorExpr mult_mono(ParamRat c, SMono num, int rpow,
                         std::array<int, 4> den) const {
    return OperatorExpr::multiplication(
        SpatialCoeff::make(std::move(c), num, rpow, den));
  }
  OperatorExpr coord(int axis) const {
    return mult_mono(ParamRat(1),
                     smono(axis == 0, axis == 1, axis == 2), 0, {0, 0, 0, 0});
  }
  OperatorExpr momentum(int axis) const {  // -i hbar d_axis
    return OperatorExpr::partial(axis).scaled(
        ParamRat(-GaussRat::i()) * hbar());
  }
  OperatorExpr angular(int k) const {
    // J_k = i hbar (x_b d_a - x_a d_b) with (a,b) = ((k+1)%3, (k+2)%3)
    int a = (k + 1) % 3, b = (k + 2) % 3;
    OperatorExpr f = compose(coord(b), OperatorExpr::partial(a)) -
                     compose(coord(a), OperatorExpr::partial(b));
    return f.scaled(ParamRat(GaussRat::i()) * hbar());
  }

  // the full potential V = -hbar^2 mu/(2 r)... note H carries
  // -hbar^2 mu / r; the B1/F inner bracket uses V = -hbar^2 mu/(2r) + sum c_k/x_k^2
  OperatorExpr coulomb_over_r(ParamRat coeff) const {
    // coeff * r/s  ==  coeff / r
    return mult_mono(std::move(coeff), smono(0, 0, 0), 1, {0, 0, 0, 1});
  }
  OperatorExpr centrifugal_sum() const {
    OperatorExpr f;
    f += mult_mono(c_k(Sym::Mu1), smono(0, 0, 0), 0, {2, 0, 0, 0});
    f += mult_mono(c_k(Sym::Mu2), smono(0, 0, 0), 0, {0, 2, 0, 0});
    f += mult_mono(c_k(Sym::Mu3), smono(0, 0, 0), 0, {0, 0, 2, 0});
    return f;
  }

  OperatorExpr hamiltonian() const {
    OperatorExpr lap = OperatorExpr::partial(0, 2) + OperatorExpr::partial(1, 2) +
                       OperatorExpr::partial(2, 2);
    OperatorExpr f = lap.scaled(hbar_pow(2) / ParamRat(-2));
    f += coulomb_over_r(-hbar_pow(2) * p.param(Sym::Mu));
    f += centrifugal_sum();
    return f;
  }

  OperatorExpr total_j() const {
    return compose(angular(0), angular(0)) + compose(angular(1), angular(1)) +
           compose(angular(2), angular(2));
  }

  OperatorExpr a1() const {
    OperatorExpr f = total_j().scaled(ParamRat(Rat(1, 2)));
    // c1 (y^2+z^2)/x^2 + c2 (x^2+z^2)/y^2 + c3 (x^2+y^2)/z^2
    f += mult_mono(c_k(Sym::Mu1), smono(0, 2, 0), 0, {2, 0, 0, 0});
    f += mult_mono(c_k(Sym::Mu1), smono(0, 0, 2), 0, {2, 0, 0, 0});
    f += mult_mono(c_k(Sym::Mu2), smono(2, 0, 0), 0, {0, 2, 0, 0});
    f += mult_mono(c_k(Sym::Mu2), smono(0, 0, 2), 0, {0, 2, 0, 0});
    f += mult_mono(c_k(Sym::Mu3), smono(2, 0, 0), 0, {0, 0, 2, 0});
    f += mult_mono(c_k(Sym::Mu3), smono(0, 2, 0), 0, {0, 0, 2, 0});
    return f;
  }

  OperatorExpr a2() const {
    OperatorExpr f = compose(angular(2), angular(2)).scaled(ParamRat(Rat(1, 2)));
    f += mult_mono(c_k(Sym::Mu1), smono(0, 2, 0), 0, {2, 0, 0, 0});
    f += mult_mono(c_k(Sym::Mu2), smono(2, 0, 0), 0, {0, 2, 0, 0});
    return f;
  }

  OperatorExpr b2() const {
    OperatorExpr f = compose(angular(1), angular(1)).scaled(ParamRat(Rat(1, 2)));
    f += mult_mono(c_k(Sym::Mu1), smono(0, 0, 2), 0, {2, 0, 0, 0});
    f += mult_mono(c_k(Sym::Mu3), smono(2, 0, 0), 0, {0, 0, 2, 0});
    return f;
  }

  // V appearing inside the Runge-Lenz-like brackets
  OperatorExpr inner_potential() const {
    return coulomb_over_r(-hbar_pow(2) * p.param(Sym::Mu) / ParamRat(2)) +
           centrifugal_sum();
  }

  // (1/4)({x,px}+{y,py}+{z,pz})^2
  OperatorExpr dilation_sq() const {
    OperatorExpr d;
    for (int ax = 0; ax < 3; ++ax)
      d += anticommutator(coord(ax), momentum(ax));
    d = d.scaled(ParamRat(Rat(1, 2)));
    return compose(d, d);
  }

  // generalized Runge-Lenz component along axis `perp`:
  //   (1/2){J_a, p_b} - (1/2){J_b, p_a} - 2 x_perp V   (signs per the model)
  OperatorExpr b1_inner() const {
    OperatorExpr f = anticommutator(angular(0), momentum(1)) -
                     anticommutator(angular(1), momentum(0));
    f = f.scaled(ParamRat(Rat(1, 2)));
    f -= compose(coord(2).scaled(ParamRat(2)), inner_potential());
    return f;
  }

  OperatorExpr f_inner() const {
    OperatorExpr f = anticommutator(angular(2), momentum(0)) -
                     anticommutator(angular(0), momentum(2));
    f = f.scaled(ParamRat(Rat(1, 2)));
    f -= compose(coord(1).scaled(ParamRat(2)), inner_potential());
    return f;
  }

  OperatorExpr b1(B1Variant variant) const {
    OperatorExpr inner = b1_inner();
    OperatorExpr f = compose(inner, inner);
    OperatorExpr w =
        mult_mono(c_k(Sym::Mu3), smono(0, 0, 0), 0, {0, 0, 2, 0});
    f += anticommutator(dilation_sq(), w);
    ParamRat trail =
        hbar_pow(4) *
        mu_sq4m1(variant == B1Variant::PrintedMu1 ? Sym::Mu1 : Sym::Mu3) *
        ParamRat(Rat(5, 16));
    f += mult_mono(std::move(trail), smono(0, 0, 0), 0, {0, 0, 2, 0});
    return f;
  }

  OperatorExpr sixth() const {
    OperatorExpr inner = f_inner();
    OperatorExpr f = compose(inner, inner);
    OperatorExpr w =
        mult_mono(c_k(Sym::Mu2), smono(0, 0, 0), 0, {0, 2, 0, 0});
    f += anticommutator(dilation_sq(), w);
    ParamRat trail = hbar_pow(4) * mu_sq4m1(Sym::Mu2) * ParamRat(Rat(5, 16));
    f += mult_mono(std::move(trail), smono(0, 0, 0), 0, {0, 2, 0, 0});
    return f;
  }
};

}  // namespace

OperatorExpr build_operator(IntegralName name, const ModelParams& p,
                            B1Variant variant) {
  Builder b{p};
  switch (name) {
    case IntegralName::H: return b.hamiltonian();
    case IntegralName::A1: return b.a1();
    case IntegralName::A2: return b.a2();
    case IntegralName::B2: return b.b2();
    case IntegralName::B1: return b.b1(variant);
    case IntegralName::F: return b.sixth();
    case IntegralName::J1: return b.angular(0);
    case IntegralName::J2: return b.angular(1);
    case IntegralName::J3: return b.angular(2);
    case IntegralName::TotalJ: return b.total_j();
    case IntegralName::Px: return b.momentum(0);
    case IntegralName::Py: return b.momentum(1);
    case IntegralName::Pz: return b.momentum(2);
  }
  throw std::logic_error("unknown integral");
}

ZeroSuiteReport verify_zero_suite(const ModelParams& p) {
  ZeroSuiteReport rep;
  OperatorExpr H = build_operator(IntegralName::H, p);
  OperatorExpr A1 = build_operator(IntegralName::A1, p);
  OperatorExpr A2 = build_operator(IntegralName::A2, p);
  OperatorExpr B2 = build_operator(IntegralName::B2, p);
  OperatorExpr B1m1 = build_operator(IntegralName::B1, p, B1Variant::PrintedMu1);
  OperatorExpr B1m3 = build_operator(IntegralName::B1, p, B1Variant::SymmetricMu3);
  OperatorExpr F = build_operator(IntegralName::F, p);

  OperatorExpr hb1_printed = commutator(H, B1m1);
  OperatorExpr hb1_symmetric = commutator(H, B1m3);
  rep.b1_printed_variant_commutes = hb1_printed.is_zero();
  rep.b1_symmetric_variant_commutes = hb1_symmetric.is_zero();
  rep.b1_selected = rep.b1_printed_variant_commutes ? B1Variant::PrintedMu1
                                                    : B1Variant::SymmetricMu3;
  const OperatorExpr& B1 =
      rep.b1_selected == B1Variant::PrintedMu1 ? B1m1 : B1m3;
  const OperatorExpr& hb1 = rep.b1_selected == B1Variant::PrintedMu1
                                ? hb1_printed
                                : hb1_symmetric;

  auto add = [&rep](const std::string& label, OperatorExpr residual) {
    bool z = residual.is_zero();
    rep.entries.push_back({label, std::move(residual), z});
  };
  add("[H,A1]", commutator(H, A1));
  add("[H,A2]", commutator(H, A2));
  add("[H,B2]", commutator(H, B2));
  add("[H,B1]", hb1);
  add("[H,F]", commutator(H, F));
  add("[A1,B2]", commutator(A1, B2));
  add("[A2,B1]", commutator(A2, B1));
  add("[F,B2]", commutator(F, B2));
  add("[A1,A2]", commutator(A1, A2));
  add("[B2,A1]", commutator(B2, A1));

  rep.all_zero = true;
  for (const auto& e : rep.entries) rep.all_zero = rep.all_zero && e.is_zero;
  return rep;
}

}  // namespace qalg
