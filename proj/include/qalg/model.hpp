#pragma once

// The nondegenerate Kepler-Coulomb model: Hamiltonian and integrals of
// motion as normal-ordered operators, parameterized by hbar, mu, mu1..mu3
// (symbols or exact rationals).

#include <optional>
#include <vector>

#include "qalg/operator.hpp"

namespace qalg {

struct ModelParams {
  // each entry is either a symbol (default) or a rational value
  std::map<Sym, GaussRat> values;  // bound parameters; unbound stay symbolic

  static ModelParams symbolic() { return {}; }
  static ModelParams rational(const Rat& hbar, const Rat& mu, const Rat& mu1,
                              const Rat& mu2, const Rat& mu3);
  bool is_bound(Sym s) const { return values.count(s) != 0; }
  // parameter as a scalar (symbol or value)
  ParamRat param(Sym s) const;
};

enum class IntegralName {
  H,
  A1,
  A2,
  B2,
  B1,
  F,
  J1,
  J2,
  J3,
  TotalJ,
  Px,
  Py,
  Pz,
};

std::optional<IntegralName> integral_from_string(const std::string& s);
std::string integral_to_string(IntegralName n);

// B1's printed trailing term carries mu1; symmetry with F suggests mu3.
enum class B1Variant { PrintedMu1, SymmetricMu3 };

OperatorExpr build_operator(IntegralName name, const ModelParams& p,
                            B1Variant b1 = B1Variant::SymmetricMu3);

struct ZeroSuiteEntry {
  std::string label;
  OperatorExpr residual;
  bool is_zero;
};

struct ZeroSuiteReport {
  std::vector<ZeroSuiteEntry> entries;
  B1Variant b1_selected;
  bool b1_printed_variant_commutes;   // [H, B1(mu1 trail)] == 0 ?
  bool b1_symmetric_variant_commutes; // [H, B1(mu3 trail)] == 0 ?
  bool all_zero;
};

// Computes [H,A1], [H,A2], [H,B2], [H,B1], [H,F], [A1,B2], [A2,B1], [F,B2],
// [A1,A2], [B2,A1]; both B1 variants are tried against H and the one that
// commutes is used for the suite.
ZeroSuiteReport verify_zero_suite(const ModelParams& p);

}  // namespace qalg
