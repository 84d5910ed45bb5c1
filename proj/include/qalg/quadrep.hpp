#pragma once

// Ternary quadratic algebra machinery: coefficient records for the two
// subalgebra pairs, the Casimir formula, the structure function, ladder
// eigenvalues, and the finite-dimensional representation conditions.

#include "qalg/engine.hpp"

namespace qalg {

// [A,[A,B]] = alpha A^2 + beta B^2 + gamma {A,B} + delta A + epsilon B + zeta
// [B,[A,B]] = a A^2 - gamma B^2 - alpha {A,B} + d A - delta B + z
// Coefficients may contain the central symbols En (energy), A2bar, A1bar.
struct QuadraticAlgebraCoeffs {
  ParamRat alpha, beta, gamma, a, delta, epsilon, zeta, d, z;
};

// Pair (A2, B2) with central symbol a1bar; the delta/zeta/d/z entries carry
// the verified corrections (see README): delta's mu1^2 coefficient is 4, and
// d carries mu3^2 rather than mu2^2.
QuadraticAlgebraCoeffs coeffs_a2b2();
// Pair (A1, B1) with central symbols E and a2bar, in the form consistent
// with the published double-commutator relations for that pair.
QuadraticAlgebraCoeffs coeffs_a1b1();

// The closed-form Casimir has a sign ambiguity in its B-term as printed;
// the corrected variant reproduces the published K1/K2 values.
enum class CasimirVariant { AsPrinted, BTermCorrected };

struct CasimirValue {
  OperatorExpr as_operator;
  bool central_ok = false;  // [K, A] = [K, B] = 0
  // expansion over monomials in the central symbols, when the fit succeeds
  bool polynomial_known = false;
  ParamRat as_polynomial;
};

// Evaluates the Casimir formula with operator arguments.  `central` maps
// each central symbol appearing in the coefficients to its operator; every
// central operator must commute with A and B (checked).
CasimirValue casimir_from_formula(
    const QuadraticAlgebraCoeffs& c, const OperatorExpr& A,
    const OperatorExpr& B, const std::map<Sym, OperatorExpr>& central,
    CasimirVariant variant = CasimirVariant::BTermCorrected);

// Published closed forms of the two Casimirs (central symbols A1bar
// respectively En/A2bar).
ParamRat printed_k1();
ParamRat printed_k2();

// Structure function Phi as a polynomial in t = u + x (symbol T).  Requires
// gamma != 0 and beta = 0; throws std::invalid_argument otherwise.
ParamRat structure_poly(const QuadraticAlgebraCoeffs& c, const ParamRat& K);

// Ladder eigenvalue A(x) = (gamma/2)((x+u)^2 - 1/4 - epsilon/gamma^2).
ParamRat ladder_value(const QuadraticAlgebraCoeffs& c, const ParamRat& u,
                      int x);

// A factorized structure function: prefactor times a product of polynomials
// in T (each factor may carry central symbols).
struct FactorCatalog {
  ParamRat prefactor;
  std::vector<ParamRat> factors;
};

ParamRat factored_product(const FactorCatalog& cat);

// Published factorizations, in t = u + x:
//   (A2,B2): four linear factors 2t -+ mu1 -+ mu2 - 1 and two a1bar-linear
//   quadratics.
FactorCatalog factored_phi_a2b2();
//   (A1,B1): two E-linear factors and two a2bar-linear quadratics.
FactorCatalog factored_phi_a1b1();
//   (A1,B1) after the Class-I substitutions a2bar -> a2(m), v=(2+sum mu)/2,
//   expressed in t = v + y: six factors, two of them E-linear.
FactorCatalog six_factor_catalog_a1b1(int m);

// Class-I eight-factor product for the (A2,B2) pair at u = (1+mu1+mu2)/2,
// as a polynomial in x (symbol T) for a fixed representation size p+1.
ParamRat class1_product_a2b2(int p);
// Class-II product with the sign of the mu3 factor corrected (the printed
// form has x - mu3; x + mu3 is required for positivity and for matching the
// structure function).
ParamRat class2_product_a2b2(int p);

struct RepresentationSolution {
  int p = 0;
  ParamRat u;                      // in the remaining parameter symbols
  std::string constrained_symbol;  // "", "E", "a1bar" or "a2bar"
  ParamRat constrained_value;
  int lower_factor = 0, upper_factor = 0;  // indices into the catalog
  std::vector<Rat> positivity;  // Phi(x) at the sample point, x = 1..p
};

// Enumerates solutions of Phi(u,0) = Phi(u,p+1) = 0 by pairing one catalog
// factor vanishing at t = u with one vanishing at t = u+p+1, then filters by
// exact positivity of Phi at x = 1..p under the sampled rational parameters.
// Results are ordered by (lower_factor, upper_factor).
std::vector<RepresentationSolution> solve_representation(
    const FactorCatalog& cat, int p,
    const std::map<Sym, GaussRat>& sample_params);

}  // namespace qalg
