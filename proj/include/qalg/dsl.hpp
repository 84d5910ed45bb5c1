#pragma once

// Text format for operator expressions and relation catalogs.
//
//   # comment
//   generators: A1 A2 B2 B1 F H;
//   label: LHS == RHS;
//
// Grammar: expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' nat)? ; atom := name | number | 'i' | '(' expr ')'
// | 'comm(' expr ',' expr ')' | 'anti(' expr ',' expr ')' | '-' atom.
// number admits rational literals p/q.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/paramrat.hpp"

namespace qalg {

struct OperatorAST;
using ASTPtr = std::shared_ptr<const OperatorAST>;

struct OperatorAST {
  enum class Kind { Generator, Number, ImagUnit, ScalarSym, Sum, Product, Power, Comm, Anti, Neg };

  Kind kind;
  std::string name;             // Generator
  Rat number;                   // Number (non-negative by construction)
  Sym scalar_sym = Sym::Hbar;   // ScalarSym
  std::vector<ASTPtr> children; // Sum/Product (>= 2), Comm/Anti (2), Neg/Power (1)
  int exponent = 0;             // Power
  int line = 0, col = 0;        // source position (0 for synthesized nodes)

  static ASTPtr generator(std::string n);
  static ASTPtr num(Rat v);
  static ASTPtr imag_unit();
  static ASTPtr scalar_sym_node(Sym s);
  static ASTPtr sum(std::vector<ASTPtr> cs);
  static ASTPtr product(std::vector<ASTPtr> cs);
  static ASTPtr power(ASTPtr base, int e);
  static ASTPtr comm(ASTPtr a, ASTPtr b);
  static ASTPtr anti(ASTPtr a, ASTPtr b);
  static ASTPtr neg(ASTPtr a);
};

bool ast_equal(const OperatorAST& a, const OperatorAST& b);

struct RelationSchema {
  std::string label;
  ASTPtr lhs, rhs;
};

struct Catalog {
  std::vector<std::string> generators;
  std::vector<RelationSchema> relations;
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " +
                           std::to_string(c)),
        line(l),
        col(c) {}
};

// Known scalar symbol names usable in relation files.
const std::map<std::string, Sym>& dsl_scalar_symbols();

Catalog parse_catalog(const std::string& text);
ASTPtr parse_expression(const std::string& text,
                        const std::vector<std::string>& generators);

std::string print_ast(const OperatorAST& ast);
std::string print_catalog(const Catalog& catalog);

}  // namespace qalg
