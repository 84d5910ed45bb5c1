#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qalg/dsl.hpp"

using namespace qalg;
using K = OperatorAST::Kind;

static const std::vector<std::string> kGens = {"A1", "A2", "B2", "B1", "F", "H"};

TEST_CASE("parsing the standard expressions") {
  ASTPtr nested = parse_expression("comm(A1, comm(A1, B1))", kGens);
  REQUIRE(nested->kind == K::Comm);
  CHECK(nested->children[0]->kind == K::Generator);
  CHECK(nested->children[0]->name == "A1");
  REQUIRE(nested->children[1]->kind == K::Comm);
  CHECK(nested->children[1]->children[1]->name == "B1");

  ASTPtr e = parse_expression("-16*hbar^2*H*A1^2 + 4*hbar^2*anti(A1,B1)", kGens);
  REQUIRE(e->kind == K::Sum);
  REQUIRE(e->children.size() == 2);
  const OperatorAST& lhs = *e->children[0];
  REQUIRE(lhs.kind == K::Product);
  REQUIRE(lhs.children.size() == 4);
  CHECK(lhs.children[0]->kind == K::Neg);
  CHECK(lhs.children[0]->children[0]->number == Rat(16));
  CHECK(lhs.children[1]->kind == K::Power);
  CHECK(lhs.children[1]->children[0]->scalar_sym == Sym::Hbar);
  CHECK(lhs.children[1]->exponent == 2);
  CHECK(lhs.children[2]->name == "H");
  CHECK(lhs.children[3]->kind == K::Power);
  const OperatorAST& rhs = *e->children[1];
  REQUIRE(rhs.kind == K::Product);
  CHECK(rhs.children[2]->kind == K::Anti);
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_expression("comm(A1, B1", kGens), ParseError);
  CHECK_THROWS_AS(parse_expression("A1 +", kGens), ParseError);
  CHECK_THROWS_AS(parse_expression("A1 A2", kGens), ParseError);
  CHECK_THROWS_AS(parse_expression("hbar^(2)", kGens), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0", kGens), ParseError);
  try {
    parse_expression("A1 +\n  Q7", kGens);
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    CHECK(pe.line == 2);
    CHECK(pe.col == 3);
    CHECK(std::string(pe.what()).find("Q7") != std::string::npos);
  }
}

TEST_CASE("printing is canonical") {
  CHECK(print_ast(*OperatorAST::comm(OperatorAST::generator("A"),
                                     OperatorAST::generator("B"))) ==
        "comm(A, B)");
  CHECK(print_ast(*OperatorAST::num(Rat(0))) == "0");
  CHECK(print_ast(*OperatorAST::num(Rat(3, 4))) == "3/4");
  ASTPtr prod = OperatorAST::product(
      {OperatorAST::neg(OperatorAST::imag_unit()),
       OperatorAST::scalar_sym_node(Sym::Hbar), OperatorAST::generator("A1")});
  CHECK(print_ast(*prod) == "-i*hbar*A1");
  // subtraction prints from an explicit negation child
  ASTPtr diff = OperatorAST::sum(
      {OperatorAST::generator("A1"),
       OperatorAST::neg(OperatorAST::product({OperatorAST::num(Rat(2)),
                                              OperatorAST::generator("B1")}))});
  CHECK(print_ast(*diff) == "A1 - 2*B1");
  // grouped structure keeps its parentheses
  ASTPtr grouped = OperatorAST::power(
      OperatorAST::sum({OperatorAST::generator("A1"), OperatorAST::generator("H")}),
      2);
  CHECK(print_ast(*grouped) == "(A1 + H)^2");
  CHECK(ast_equal(*parse_expression("(A1 + H)^2", kGens), *grouped));
}

TEST_CASE("catalog parsing") {
  const std::string text =
      "# a small test catalog\n"
      "generators: A1 A2 B2;  # trailing comment\n"
      "zero1: comm(A1, A2) == 0;\n"
      "cube: comm(A2, comm(A2, B2)) == 4*hbar^2*A2^2 + 4*hbar^2*anti(A2, B2)\n"
      "      - (4*A1 - hbar^2*(4*mu1^2 - 3))*hbar^2*A2;\n";
  Catalog cat = parse_catalog(text);
  REQUIRE(cat.generators == std::vector<std::string>{"A1", "A2", "B2"});
  REQUIRE(cat.relations.size() == 2);
  CHECK(cat.relations[0].label == "zero1");
  CHECK(cat.relations[0].rhs->kind == K::Number);
  CHECK(cat.relations[1].lhs->kind == K::Comm);

  // the printed catalog re-parses to the same structure
  Catalog again = parse_catalog(print_catalog(cat));
  REQUIRE(again.relations.size() == cat.relations.size());
  for (size_t k = 0; k < cat.relations.size(); ++k) {
    CHECK(again.relations[k].label == cat.relations[k].label);
    CHECK(ast_equal(*again.relations[k].lhs, *cat.relations[k].lhs));
    CHECK(ast_equal(*again.relations[k].rhs, *cat.relations[k].rhs));
  }

  CHECK_THROWS_AS(parse_catalog("generators: A1 A1;\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("generators: hbar;\n"), ParseError);
  CHECK_THROWS_AS(
      parse_catalog("generators: A1;\nr: A1 == 0;\nr: A1 == 0;\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("generators: A1;\nr: A1 == X9;\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("r: A1 == 0;\n"), ParseError);
}

namespace {

ASTPtr random_ast(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> leaf_pick(0, 3);
  std::uniform_int_distribution<int> node_pick(0, 9);
  std::uniform_int_distribution<int> gen_pick(0, (int)kGens.size() - 1);
  std::uniform_int_distribution<int> sym_pick(0, kNumSyms - 1);
  std::uniform_int_distribution<int> small(0, 12);
  std::uniform_int_distribution<int> denp(1, 7);

  if (depth <= 0 || node_pick(rng) < 4) {
    switch (leaf_pick(rng)) {
      case 0:
        return OperatorAST::generator(kGens[gen_pick(rng)]);
      case 1:
        return OperatorAST::num(Rat(small(rng), denp(rng)));
      case 2:
        return OperatorAST::imag_unit();
      default:
        return OperatorAST::scalar_sym_node(static_cast<Sym>(sym_pick(rng)));
    }
  }
  std::uniform_int_distribution<int> arity(2, 4);
  std::uniform_int_distribution<int> exp(0, 5);
  switch (node_pick(rng)) {
    case 4:
    case 5: {
      std::vector<ASTPtr> cs;
      for (int k = arity(rng); k > 0; --k) cs.push_back(random_ast(rng, depth - 1));
      return OperatorAST::sum(std::move(cs));
    }
    case 6:
    case 7: {
      std::vector<ASTPtr> cs;
      for (int k = arity(rng); k > 0; --k) cs.push_back(random_ast(rng, depth - 1));
      return OperatorAST::product(std::move(cs));
    }
    case 8:
      return OperatorAST::power(random_ast(rng, depth - 1), exp(rng));
    default:
      break;
  }
  std::uniform_int_distribution<int> tri(0, 2);
  switch (tri(rng)) {
    case 0:
      return OperatorAST::comm(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 1:
      return OperatorAST::anti(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    default:
      return OperatorAST::neg(random_ast(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("round-trip property: parse(print(ast)) == ast") {
  std::mt19937 rng(20110611);
  for (int iter = 0; iter < 600; ++iter) {
    ASTPtr ast = random_ast(rng, 4);
    std::string text = print_ast(*ast);
    INFO("case " << iter << ": " << text);
    ASTPtr back = parse_expression(text, kGens);
    CHECK(ast_equal(*ast, *back));
    // canonical text is a fixed point of print∘parse
    CHECK(print_ast(*back) == text);
  }
}
