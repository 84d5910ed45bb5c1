#pragma once

// Evaluates relation ASTs against operator bindings, verifies catalogs, and
// fits structure constants by exact linear algebra over the scalar field.

#include <functional>

#include "qalg/dsl.hpp"
#include "qalg/model.hpp"

namespace qalg {

// generator name -> concrete operator
using Binding = std::map<std::string, OperatorExpr>;

// Binds every declared generator to its built-in integral of motion.
// Throws std::invalid_argument for names the model does not provide.
Binding standard_binding(const std::vector<std::string>& generators,
                         const ModelParams& p,
                         B1Variant b1 = B1Variant::SymmetricMu3);

// Evaluates an expression tree; scalar symbols are resolved through the
// model parameters (bound parameters become numbers, the rest stay symbolic).
OperatorExpr evaluate_ast(const OperatorAST& ast, const Binding& bind,
                          const ModelParams& p);

struct Residual {
  std::string label;
  OperatorExpr residual;  // lhs - rhs
  bool is_zero;
  std::string summary;  // term count and leading terms when nonzero
};

Residual verify_relation(const RelationSchema& rel, const Binding& bind,
                         const ModelParams& p);

struct BasisElement {
  std::string label;
  OperatorExpr op;
};

struct FitOutcome {
  enum class Status { Unique, Underdetermined, NoSolution };
  Status status = Status::NoSolution;
  // basis label -> fitted coefficient (free coordinates set to zero when
  // underdetermined); zero coefficients are kept so callers can diff against
  // printed constants
  std::vector<std::pair<std::string, ParamRat>> constants;
  int nullity = 0;
};

std::string fit_status_str(FitOutcome::Status s);

// Solves target = sum_i c_i * basis_i exactly for scalars c_i, by Gaussian
// elimination on the coefficient coordinates of the normal-ordered forms.
FitOutcome fit_structure_constants(const OperatorExpr& target,
                                   const std::vector<BasisElement>& basis);

// Monomial basis for refitting a failed relation: the operator words that
// appear in the relation itself, plus all degree-<=2 monomials in its
// non-central generators times powers of H up to the highest power present
// (at least 2).  Duplicate operators are merged.
std::vector<BasisElement> refit_basis(const RelationSchema& rel,
                                      const Binding& bind,
                                      const ModelParams& p);

struct RelationResult {
  std::string label;
  bool zero_residual = false;
  std::size_t residual_terms = 0;
  std::string residual_summary;  // empty when the residual vanishes
  // set when the relation text coincides with an earlier entry
  std::string duplicate_of;
  // refit data (only when the residual is nonzero and auto_refit is on)
  bool refit_attempted = false;
  FitOutcome fit;
  bool fit_verified = false;  // residual of the refitted relation vanishes
  double seconds = 0.0;

  bool ok() const { return zero_residual || fit_verified; }
};

struct CatalogReport {
  std::vector<RelationResult> results;
  bool all_ok() const;
};

// Verifies every relation; on a nonzero residual (and auto_refit) fits the
// left-hand side onto the refit basis and re-verifies with the fitted
// constants.  Relations are processed in parallel (threads <= 0 picks the
// hardware count); the result order matches the catalog order.
CatalogReport verify_catalog(const Catalog& cat, const ModelParams& p,
                             bool auto_refit = true, int threads = 0);

// Thread cap from the QALG_THREADS environment variable (0 = unlimited).
int env_thread_cap();

}  // namespace qalg
