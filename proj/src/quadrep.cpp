#include "qalg/quadrep.hpp"

#include <optional>

namespace qalg {

namespace {

ParamRat sym(Sym s, int k = 1) { return ParamRat::symbol(s, k); }

const ParamRat kH2 = sym(Sym::Hbar, 2);
const ParamRat kH4 = sym(Sym::Hbar, 4);
const ParamRat kH6 = sym(Sym::Hbar, 6);
const ParamRat kH8 = sym(Sym::Hbar, 8);
const ParamRat kMu2 = sym(Sym::Mu, 2);
const ParamRat kM1 = sym(Sym::Mu1, 2);
const ParamRat kM2 = sym(Sym::Mu2, 2);
const ParamRat kM3 = sym(Sym::Mu3, 2);

// coefficient of s^k, with the s-power stripped
ParamPoly coeff_in(const ParamPoly& p, Sym s, int k) {
  ParamPoly out;
  for (const auto& [m, c] : p.terms())
    if (mono_exp(m, s) == k) out.add_term(mono_set_exp(m, s, 0), c);
  return out;
}

// substitutes a (possibly non-polynomial) value for T in a polynomial-in-T
// rational function whose denominator is T-free
ParamRat subst_T(const ParamRat& f, const ParamRat& val) {
  if (f.den().depends_on(Sym::T))
    throw std::invalid_argument("denominator depends on t");
  ParamRat out;
  ParamRat vp(1);
  for (int k = 0; k <= f.num().degree_in(Sym::T); ++k) {
    out += ParamRat(coeff_in(f.num(), Sym::T, k), f.den()) * vp;
    vp *= val;
  }
  return out;
}

}  // namespace

QuadraticAlgebraCoeffs coeffs_a2b2() {
  ParamRat a1b = sym(Sym::A1bar);
  QuadraticAlgebraCoeffs c;
  c.alpha = kH2 * ParamRat(4);
  c.beta = ParamRat(0);
  c.gamma = kH2 * ParamRat(4);
  c.a = ParamRat(0);
  c.delta = a1b * kH2 * ParamRat(-4) + kH4 * (kM1 * ParamRat(4) - ParamRat(3));
  c.epsilon = kH4 * (kM1 * ParamRat(4) + kM2 * ParamRat(4) - ParamRat(6));
  c.zeta = a1b * kH4 * (ParamRat(3) - kM1 * ParamRat(4)) + kH6 * (kM2 - kM1);
  c.d = kH4 * (kM1 * ParamRat(-4) - kM3 * ParamRat(4) + ParamRat(6));
  c.z = a1b * kH4 * (kM1 * ParamRat(4) - ParamRat(3)) + kH6 * (kM1 - kM3);
  return c;
}

QuadraticAlgebraCoeffs coeffs_a1b1() {
  ParamRat E = sym(Sym::En);
  ParamRat E2 = sym(Sym::En, 2);
  ParamRat a2b = sym(Sym::A2bar);
  ParamRat msum = kM1 + kM2 + kM3;
  QuadraticAlgebraCoeffs c;
  c.alpha = E * kH2 * ParamRat(-16);
  c.beta = ParamRat(0);
  c.gamma = kH2 * ParamRat(4);
  c.a = ParamRat(0);
  c.delta = a2b * E * kH2 * ParamRat(16) -
            E * kH4 *
                (kM1 * ParamRat(8) + kM2 * ParamRat(8) + kM3 * ParamRat(24) -
                 ParamRat(10)) -
            kMu2 * kH6 * ParamRat(4);
  c.epsilon = kH4 * (msum * ParamRat(4) - ParamRat(6));
  c.zeta = a2b * kMu2 * kH6 * ParamRat(4) +
           kMu2 * kH8 * (ParamRat(2) - kM3 * ParamRat(4)) +
           a2b * E * kH4 * (msum * ParamRat(8) - ParamRat(10)) +
           E * kH6 *
               (ParamRat(1) - kM3 * ParamRat(2) * (msum * ParamRat(4) - ParamRat(5)));
  c.d = E2 * kH4 * (ParamRat(80) - kM3 * ParamRat(64));
  c.z = a2b * E2 * kH4 * ParamRat(-32) +
        E * kMu2 * kH8 * (ParamRat(12) - kM3 * ParamRat(16)) -
        E2 * kH6 *
            (sym(Sym::Mu3, 4) * ParamRat(32) +
             kM3 * (kM1 * ParamRat(32) + kM2 * ParamRat(32) - ParamRat(48)) -
             kM1 * ParamRat(24) - kM2 * ParamRat(24) + ParamRat(2));
  return c;
}

ParamRat printed_k2() {
  ParamRat a1b = sym(Sym::A1bar);
  ParamRat h8 = sym(Sym::Hbar, 8);
  ParamRat inner = (kM2 * (ParamRat(1) - kM3) * ParamRat(32) +
                    kM3 * ParamRat(32) + ParamRat(2)) *
                       kM1 -
                   kM3 * ParamRat(30) + kM2 * (kM3 * ParamRat(32) - ParamRat(30)) +
                   ParamRat(9);
  return inner * h8 * ParamRat(Rat(1, 8)) +
         a1b * kH6 * (kM1 * ParamRat(12) - ParamRat(7)) * ParamRat(Rat(3, 2)) +
         a1b * a1b * kH4 * (kM1 - ParamRat(1)) * ParamRat(4);
}

ParamRat printed_k1() {
  ParamRat E = sym(Sym::En), E2 = sym(Sym::En, 2);
  ParamRat a2b = sym(Sym::A2bar);
  ParamRat mu4 = sym(Sym::Mu, 4);
  ParamRat m3_4 = sym(Sym::Mu3, 4), m3_6 = sym(Sym::Mu3, 6);
  ParamRat m1_4 = sym(Sym::Mu1, 4), m2_4 = sym(Sym::Mu2, 4);
  ParamRat h10 = sym(Sym::Hbar, 10), h12 = sym(Sym::Hbar, 12);
  ParamRat k = mu4 * (kM3 - ParamRat(1)) * h12 * ParamRat(4);
  k += kMu2 * h10 * ParamRat(4) *
       (m3_4 * ParamRat(4) - kM3 * ParamRat(23) +
        kM1 * (kM3 - ParamRat(1)) * ParamRat(4) +
        kM2 * (kM3 - ParamRat(1)) * ParamRat(4) + ParamRat(8)) *
       E;
  k += a2b * kMu2 * kH8 * ParamRat(56) * E;
  ParamRat h2coef =
      m1_4 * (kM3 - ParamRat(1)) * ParamRat(16) +
      kM1 * ParamRat(4) *
          (m3_4 * ParamRat(8) - kM3 * ParamRat(34) +
           kM2 * (kM3 - ParamRat(1)) * ParamRat(8) + ParamRat(5)) +
      kM3 * ParamRat(97) +
      ParamRat(4) * (m3_6 * ParamRat(4) - m3_4 * ParamRat(42) +
                     m2_4 * (kM3 - ParamRat(1)) * ParamRat(4) +
                     kM2 * (m3_4 * ParamRat(8) - kM3 * ParamRat(34) + ParamRat(5))) +
      ParamRat(15);
  k += h2coef * kH8 * E2;
  k += a2b * kH6 * ParamRat(4) *
       (kM1 * ParamRat(28) + kM2 * ParamRat(28) + kM3 * ParamRat(52) -
        ParamRat(31)) *
       E2;
  k += a2b * a2b * kH4 * ParamRat(-48) * E2;
  return k;
}

namespace {

// converts a polynomial scalar that may carry central symbols into the
// corresponding operator (central symbols replaced by their operators)
OperatorExpr scalar_to_operator(const ParamRat& c,
                                const std::map<Sym, OperatorExpr>& central) {
  for (const auto& [s, op] : central)
    if (c.den().depends_on(s))
      throw std::invalid_argument(
          "central symbol in a scalar denominator is unsupported");
  OperatorExpr out;
  for (const auto& [m, coef] : c.num().terms()) {
    Mono rest = m;
    OperatorExpr term = OperatorExpr::identity();
    for (const auto& [s, op] : central) {
      int e = mono_exp(m, s);
      if (e > 0) {
        rest = mono_set_exp(rest, s, 0);
        term = compose(term, pow(op, e));
      }
    }
    term = term.scaled(ParamRat(ParamPoly::term(rest, coef), c.den()));
    out += term;
  }
  return out;
}

}  // namespace

CasimirValue casimir_from_formula(const QuadraticAlgebraCoeffs& c,
                                  const OperatorExpr& A, const OperatorExpr& B,
                                  const std::map<Sym, OperatorExpr>& central,
                                  CasimirVariant variant) {
  for (const auto& [s, op] : central) {
    if (!commutator(op, A).is_zero() || !commutator(op, B).is_zero())
      throw std::invalid_argument(std::string("operator bound to '") +
                                  kSymNames[static_cast<int>(s)] +
                                  "' is not central");
  }
  auto S = [&](const ParamRat& coef) { return scalar_to_operator(coef, central); };
  ParamRat third(Rat(1, 3)), two_thirds(Rat(2, 3));

  OperatorExpr C = commutator(A, B);
  OperatorExpr Asq = compose(A, A);
  OperatorExpr Bsq = compose(B, B);

  OperatorExpr K = compose(C, C);
  K -= compose(S(c.alpha), anticommutator(Asq, B));
  K -= compose(S(c.gamma), anticommutator(A, Bsq));
  K += compose(S(c.alpha * c.gamma - c.delta + c.a * c.beta * third),
               anticommutator(A, B));
  K -= compose(S(c.beta * two_thirds), compose(Bsq, B));
  K += compose(S(c.gamma * c.gamma - c.epsilon - c.alpha * c.beta * third), Bsq);
  ParamRat bterm = variant == CasimirVariant::BTermCorrected
                       ? c.gamma * c.delta - ParamRat(2) * c.zeta -
                             c.beta * c.d * third
                       : -(c.gamma * c.delta) + ParamRat(2) * c.zeta -
                             c.beta * c.d * third;
  K += compose(S(bterm), B);
  K += compose(S(c.a * two_thirds), compose(Asq, A));
  K += compose(S(c.d + c.a * c.gamma * third + c.alpha * c.alpha), Asq);
  K += compose(S(c.a * c.epsilon * third + c.alpha * c.delta + ParamRat(2) * c.z),
               A);

  CasimirValue out;
  out.as_operator = K;
  out.central_ok = commutator(K, A).is_zero() && commutator(K, B).is_zero();

  // expand over monomials in the central symbols
  std::vector<std::pair<Mono, OperatorExpr>> monos{{Mono{0}, OperatorExpr::identity()}};
  for (const auto& [s, op] : central) {
    int maxdeg = s == Sym::En ? 3 : 2;
    std::vector<std::pair<Mono, OperatorExpr>> next;
    for (const auto& [m, base] : monos)
      for (int e = 0; e <= maxdeg; ++e)
        next.emplace_back(mono_set_exp(m, s, e),
                          e == 0 ? base : compose(base, pow(op, e)));
    monos = std::move(next);
  }
  std::vector<BasisElement> basis;
  for (const auto& [m, op] : monos) basis.push_back({mono_str(m), op});
  FitOutcome fit = fit_structure_constants(K, basis);
  if (fit.status == FitOutcome::Status::Unique) {
    ParamRat poly;
    for (size_t j = 0; j < monos.size(); ++j)
      poly += fit.constants[j].second * ParamRat(ParamPoly::term(monos[j].first, GaussRat::one()));
    out.as_polynomial = poly;
    out.polynomial_known = true;
  }
  return out;
}

ParamRat structure_poly(const QuadraticAlgebraCoeffs& c, const ParamRat& K) {
  if (!c.beta.is_zero())
    throw std::invalid_argument("structure function requires beta = 0");
  if (c.gamma.is_zero())
    throw std::invalid_argument("structure function requires gamma != 0");

  ParamRat t = sym(Sym::T);
  ParamRat T1 = t * ParamRat(2) - ParamRat(1);
  ParamRat T3 = t * ParamRat(2) - ParamRat(3);
  ParamRat Tp = t * ParamRat(2) + ParamRat(1);
  ParamRat T1sq = T1 * T1;
  ParamRat T1q = T1sq * T1sq;
  const ParamRat &al = c.alpha, &g = c.gamma, &de = c.delta, &ep = c.epsilon,
                 &ze = c.zeta, &aa = c.a, &dd = c.d, &zz = c.z;
  ParamRat g2 = g * g, g3 = g2 * g, g4 = g3 * g, g5 = g4 * g, g6 = g5 * g,
           g8 = g6 * g2;

  ParamRat phi = K * T1sq * g6 * ParamRat(-3072);
  phi += T3 * T1q * Tp * g6 *
         (ep * al * al - g * de * al - dd * g2 + aa * g * ep) * ParamRat(-48);
  phi += T3 * T3 * T1q * Tp * Tp * (al * al * ParamRat(3) + aa * g * ParamRat(4)) * g8;
  ParamRat quad = ze * g2 * ParamRat(4) - de * ep * g * ParamRat(2) + al * ep * ep;
  phi += quad * quad * ParamRat(768);
  phi += T1sq * (t * t * ParamRat(12) - t * ParamRat(12) - ParamRat(1)) * g4 *
         (zz * g3 * ParamRat(8) + de * de * g2 * ParamRat(2) -
          dd * ep * g2 * ParamRat(4) + al * ze * g2 * ParamRat(4) +
          aa * ep * ep * g * ParamRat(2) - al * de * ep * g * ParamRat(6) +
          al * al * ep * ep * ParamRat(3)) *
         ParamRat(32);
  phi -= T1sq * g2 *
         (zz * g5 * ParamRat(-4) + de * de * g4 * ParamRat(2) +
          dd * ep * g4 * ParamRat(2) + al * ze * g4 * ParamRat(4) +
          zz * ep * g3 * ParamRat(12) - de * ze * g3 * ParamRat(12) -
          dd * ep * ep * g2 * ParamRat(3) + de * de * ep * g2 * ParamRat(6) +
          al * ep * ze * g2 * ParamRat(12) + aa * ep * ep * ep * g -
          al * de * ep * ep * g * ParamRat(9) + al * al * ep * ep * ep * ParamRat(3)) *
         ParamRat(256);
  return phi;
}

ParamRat ladder_value(const QuadraticAlgebraCoeffs& c, const ParamRat& u,
                      int x) {
  if (c.gamma.is_zero())
    throw std::invalid_argument("ladder eigenvalue requires gamma != 0");
  ParamRat xu = u + ParamRat(x);
  return c.gamma * ParamRat(Rat(1, 2)) *
         (xu * xu - ParamRat(Rat(1, 4)) - c.epsilon / (c.gamma * c.gamma));
}

ParamRat factored_product(const FactorCatalog& cat) {
  ParamRat out = cat.prefactor;
  for (const auto& f : cat.factors) out *= f;
  return out;
}

namespace {

ParamRat two_pow(int k) { return ParamRat(Rat(std::int64_t{1} << k)); }

}  // namespace

FactorCatalog factored_phi_a2b2() {
  ParamRat t = sym(Sym::T);
  ParamRat m1 = sym(Sym::Mu1), m2 = sym(Sym::Mu2), m3 = sym(Sym::Mu3);
  ParamRat a1b = sym(Sym::A1bar);
  FactorCatalog cat;
  cat.prefactor = ParamRat(3) * two_pow(18) * sym(Sym::Hbar, 16);
  ParamRat t2 = t * ParamRat(2);
  cat.factors = {
      t2 - m1 - m2 - ParamRat(1),
      t2 + m1 - m2 - ParamRat(1),
      t2 - m1 + m2 - ParamRat(1),
      t2 + m1 + m2 - ParamRat(1),
      kH2 * t * t * ParamRat(8) - kH2 * (m3 + ParamRat(1)) * t * ParamRat(8) -
          kH2 * (kM1 + kM2 - ParamRat(Rat(1, 2))) * ParamRat(2) +
          kH2 * (m3 + ParamRat(Rat(1, 2))) * ParamRat(4) - a1b * ParamRat(4),
      kH2 * t * t * ParamRat(8) + kH2 * (m3 - ParamRat(1)) * t * ParamRat(8) -
          kH2 * (kM1 + kM2 - ParamRat(Rat(1, 2))) * ParamRat(2) -
          kH2 * (m3 - ParamRat(Rat(1, 2))) * ParamRat(4) - a1b * ParamRat(4),
  };
  return cat;
}

FactorCatalog factored_phi_a1b1() {
  ParamRat t = sym(Sym::T);
  ParamRat m3 = sym(Sym::Mu3);
  ParamRat E = sym(Sym::En), a2b = sym(Sym::A2bar);
  FactorCatalog cat;
  cat.prefactor = ParamRat(3) * two_pow(18) * sym(Sym::Hbar, 16);
  ParamRat f1 = t * ParamRat(4) - ParamRat(3);
  ParamRat f2 = t * ParamRat(4) - ParamRat(1);
  cat.factors = {
      kH2 * kMu2 * ParamRat(2) + f1 * f1 * E,
      kH2 * kMu2 * ParamRat(2) + f2 * f2 * E,
      kH2 * t * t * ParamRat(8) - kH2 * (m3 + ParamRat(1)) * t * ParamRat(8) -
          kH2 * (kM1 + kM2 - kM3 - ParamRat(Rat(1, 2))) * ParamRat(2) +
          kH2 * (m3 + ParamRat(Rat(1, 2))) * ParamRat(4) - a2b * ParamRat(4),
      kH2 * t * t * ParamRat(8) + kH2 * (m3 - ParamRat(1)) * t * ParamRat(8) -
          kH2 * (kM1 + kM2 - kM3 - ParamRat(Rat(1, 2))) * ParamRat(2) -
          kH2 * (m3 - ParamRat(Rat(1, 2))) * ParamRat(4) - a2b * ParamRat(4),
  };
  return cat;
}

FactorCatalog six_factor_catalog_a1b1(int m) {
  ParamRat t = sym(Sym::T);
  ParamRat m1 = sym(Sym::Mu1), m2 = sym(Sym::Mu2), m3 = sym(Sym::Mu3);
  ParamRat E = sym(Sym::En);
  ParamRat msum = m1 + m2 + m3;
  ParamRat v = (ParamRat(2) + msum) * ParamRat(Rat(1, 2));
  ParamRat y = t - v;
  ParamRat mm(m);
  FactorCatalog cat;
  cat.prefactor = ParamRat(3) * two_pow(24) * sym(Sym::Hbar, 20);
  ParamRat e1 = ParamRat(1) + y * ParamRat(4) + msum * ParamRat(2);
  ParamRat e2 = ParamRat(3) + y * ParamRat(4) + msum * ParamRat(2);
  cat.factors = {
      y - mm,
      ParamRat(1) + mm + y + m1 + m2,
      y - mm + m3,
      ParamRat(1) + mm + y + msum,
      kH2 * kMu2 * ParamRat(2) + e1 * e1 * E,
      kH2 * kMu2 * ParamRat(2) + e2 * e2 * E,
  };
  return cat;
}

ParamRat class1_product_a2b2(int p) {
  ParamRat x = sym(Sym::T);
  ParamRat m1 = sym(Sym::Mu1), m2 = sym(Sym::Mu2), m3 = sym(Sym::Mu3);
  ParamRat pp(p);
  ParamRat out = ParamRat(3) * two_pow(28) * sym(Sym::Hbar, 20);
  out *= x;
  out *= pp - x + ParamRat(1);
  out *= x + m1;
  out *= x + m2;
  out *= x + m1 + m2;
  out *= pp - x + m3 + ParamRat(1);
  out *= pp + x + m1 + m2 + ParamRat(1);
  out *= pp + x + m1 + m2 + m3 + ParamRat(1);
  return out;
}

ParamRat class2_product_a2b2(int p) {
  ParamRat x = sym(Sym::T);
  ParamRat m1 = sym(Sym::Mu1), m2 = sym(Sym::Mu2), m3 = sym(Sym::Mu3);
  ParamRat pp(p);
  ParamRat out = ParamRat(3) * two_pow(28) * sym(Sym::Hbar, 20);
  out *= x;
  out *= pp - x + ParamRat(1);
  out *= pp - x + m1 + ParamRat(1);
  out *= pp - x + m2 + ParamRat(1);
  out *= pp * ParamRat(2) - x + m1 + m2 + ParamRat(2);
  out *= pp - x + m1 + m2 + ParamRat(1);
  out *= x + m3;  // printed with x - mu3; positivity requires x + mu3
  out *= pp * ParamRat(2) - x + m1 + m2 + m3 + ParamRat(2);
  return out;
}

namespace {

const std::array<Sym, 3> kCentralSyms = {Sym::En, Sym::A2bar, Sym::A1bar};

bool central_free(const ParamRat& f) {
  for (Sym s : kCentralSyms)
    if (f.depends_on(s)) return false;
  return true;
}

// a factor that is linear in T with central-free coefficients pins t
std::optional<ParamRat> linear_root_in_T(const ParamRat& f) {
  if (!central_free(f) || f.num().degree_in(Sym::T) != 1) return std::nullopt;
  ParamRat c1(coeff_in(f.num(), Sym::T, 1));
  ParamRat c0(coeff_in(f.num(), Sym::T, 0));
  return -(c0 / c1);
}

// a factor linear in exactly one central symbol pins that symbol once t is
// substituted
std::optional<std::pair<Sym, ParamRat>> solve_central(const ParamRat& f_at) {
  Sym found = Sym::T;
  int count = 0;
  for (Sym s : kCentralSyms)
    if (f_at.depends_on(s)) {
      found = s;
      ++count;
    }
  if (count != 1) return std::nullopt;
  if (f_at.num().degree_in(found) != 1 || f_at.den().depends_on(found))
    return std::nullopt;
  ParamRat c1(coeff_in(f_at.num(), found, 1));
  ParamRat c0(coeff_in(f_at.num(), found, 0));
  return std::make_pair(found, -(c0 / c1));
}

}  // namespace

std::vector<RepresentationSolution> solve_representation(
    const FactorCatalog& cat, int p,
    const std::map<Sym, GaussRat>& sample_params) {
  std::vector<RepresentationSolution> out;
  const int n = static_cast<int>(cat.factors.size());
  ParamRat shift(p + 1);

  auto try_candidate = [&](int lo, int hi, const ParamRat& u, Sym csym,
                           const ParamRat& cval, bool has_constraint) {
    // assemble the full evaluation point
    std::map<Sym, GaussRat> point = sample_params;
    if (has_constraint) {
      GaussRat v;
      try {
        v = cval.evaluate(point);
      } catch (const std::exception&) {
        return;
      }
      point[csym] = v;
    }
    GaussRat ueval;
    try {
      ueval = u.evaluate(point);
    } catch (const std::exception&) {
      return;
    }
    for (Sym s : kCentralSyms) {
      bool used = cat.prefactor.depends_on(s);
      for (const auto& f : cat.factors) used = used || f.depends_on(s);
      if (used && !point.count(s)) return;  // symbol left unbound
    }

    auto phi_at = [&](int x) {
      std::map<Sym, GaussRat> pt = point;
      pt[Sym::T] = ueval + GaussRat(x);
      GaussRat val = cat.prefactor.evaluate(pt);
      for (const auto& f : cat.factors) val *= f.evaluate(pt);
      return val;
    };
    try {
      if (!phi_at(0).is_zero() || !phi_at(p + 1).is_zero()) return;
      RepresentationSolution sol;
      sol.p = p;
      sol.u = u;
      sol.lower_factor = lo;
      sol.upper_factor = hi;
      if (has_constraint) {
        sol.constrained_symbol = kSymNames[static_cast<int>(csym)];
        sol.constrained_value = cval;
      }
      for (int x = 1; x <= p; ++x) {
        GaussRat v = phi_at(x);
        if (!v.is_real() || !(v.re > 0)) return;
        sol.positivity.push_back(v.re);
      }
      // drop exact duplicates found through a different factor pair
      for (const auto& prev : out)
        if (prev.u == sol.u && prev.constrained_symbol == sol.constrained_symbol &&
            prev.constrained_value == sol.constrained_value)
          return;
      out.push_back(std::move(sol));
    } catch (const std::exception&) {
      return;  // pole while evaluating: reject the candidate
    }
  };

  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi) {
      if (lo == hi) continue;
      const ParamRat& flo = cat.factors[lo];
      const ParamRat& fhi = cat.factors[hi];
      if (auto r = linear_root_in_T(flo)) {
        ParamRat u = *r;  // f_lo(u) = 0
        ParamRat fhi_at = subst_T(fhi, u + shift);
        if (central_free(fhi)) {
          if (fhi_at.is_zero())
            try_candidate(lo, hi, u, Sym::T, ParamRat(), false);
        } else if (auto s = solve_central(fhi_at)) {
          try_candidate(lo, hi, u, s->first, s->second, true);
        }
      } else if (auto r2 = linear_root_in_T(fhi)) {
        ParamRat u = *r2 - shift;  // f_hi(u+p+1) = 0
        ParamRat flo_at = subst_T(flo, u);
        if (!central_free(flo)) {
          if (auto s = solve_central(flo_at))
            try_candidate(lo, hi, u, s->first, s->second, true);
        } else if (flo_at.is_zero()) {
          try_candidate(lo, hi, u, Sym::T, ParamRat(), false);
        }
      }
    }
  return out;
}

}  // namespace qalg
