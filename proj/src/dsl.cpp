#include "qalg/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace qalg {

ASTPtr OperatorAST::generator(std::string n) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Generator;
  a->name = std::move(n);
  return a;
}
ASTPtr OperatorAST::num(Rat v) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Number;
  a->number = std::move(v);
  return a;
}
ASTPtr OperatorAST::imag_unit() {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::ImagUnit;
  return a;
}
ASTPtr OperatorAST::scalar_sym_node(Sym s) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::ScalarSym;
  a->scalar_sym = s;
  return a;
}
ASTPtr OperatorAST::sum(std::vector<ASTPtr> cs) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Sum;
  a->children = std::move(cs);
  return a;
}
ASTPtr OperatorAST::product(std::vector<ASTPtr> cs) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Product;
  a->children = std::move(cs);
  return a;
}
ASTPtr OperatorAST::power(ASTPtr base, int e) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Power;
  a->children = {std::move(base)};
  a->exponent = e;
  return a;
}
ASTPtr OperatorAST::comm(ASTPtr x, ASTPtr y) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Comm;
  a->children = {std::move(x), std::move(y)};
  return a;
}
ASTPtr OperatorAST::anti(ASTPtr x, ASTPtr y) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Anti;
  a->children = {std::move(x), std::move(y)};
  return a;
}
ASTPtr OperatorAST::neg(ASTPtr x) {
  auto a = std::make_shared<OperatorAST>();
  a->kind = Kind::Neg;
  a->children = {std::move(x)};
  return a;
}

bool ast_equal(const OperatorAST& a, const OperatorAST& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case OperatorAST::Kind::Generator:
      return a.name == b.name;
    case OperatorAST::Kind::Number:
      return a.number == b.number;
    case OperatorAST::Kind::ImagUnit:
      return true;
    case OperatorAST::Kind::ScalarSym:
      return a.scalar_sym == b.scalar_sym;
    case OperatorAST::Kind::Power:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!ast_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

const std::map<std::string, Sym>& dsl_scalar_symbols() {
  static const std::map<std::string, Sym> table = [] {
    std::map<std::string, Sym> m;
    for (int s = 0; s < kNumSyms; ++s)
      m.emplace(kSymNames[s], static_cast<Sym>(s));
    return m;
  }();
  return table;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, EqEq, End };
  Kind kind;
  std::string text;  // Ident / Punct (single char)
  Rat value;         // Number
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text = "<end of input>";
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      boost::multiprecision::mpz_int num = read_digits();
      boost::multiprecision::mpz_int den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        // rational literal p/q; only when a digit follows the slash
        size_t save = pos_;
        int sl = line_, sc = col_;
        bump();
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          den = read_digits();
          if (den == 0) throw ParseError("zero denominator in literal", sl, sc);
        } else {
          pos_ = save;
        }
      }
      tok_.kind = Token::Kind::Number;
      tok_.value = Rat(num, den);
      return;
    }
    if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      bump();
      bump();
      tok_.kind = Token::Kind::EqEq;
      tok_.text = "==";
      return;
    }
    if (std::string("+-*^(),:;").find(c) != std::string::npos) {
      bump();
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, c);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  boost::multiprecision::mpz_int read_digits() {
    boost::multiprecision::mpz_int v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      bump();
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, std::vector<std::string> generators)
      : lex_(text), generators_(std::move(generators)) {}

  ASTPtr parse_expr() {
    ASTPtr first = parse_term();
    std::vector<ASTPtr> parts;
    while (is_punct("+") || is_punct("-")) {
      bool minus = lex_.take().text == "-";
      ASTPtr t = parse_term();
      if (parts.empty()) parts.push_back(first);
      parts.push_back(minus ? OperatorAST::neg(t) : t);
    }
    return parts.empty() ? first : OperatorAST::sum(std::move(parts));
  }

  bool at_end() const { return lex_.peek().kind == Token::Kind::End; }
  const Token& peek() const { return lex_.peek(); }
  Token take() { return lex_.take(); }

  bool is_punct(const std::string& s) const {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == s;
  }

  Token expect_punct(const std::string& s) {
    if (!is_punct(s))
      throw ParseError("expected '" + s + "', found '" + lex_.peek().text + "'",
                       lex_.peek().line, lex_.peek().col);
    return lex_.take();
  }

  Token expect_ident(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::Ident)
      throw ParseError("expected " + what + ", found '" + lex_.peek().text +
                           "'",
                       lex_.peek().line, lex_.peek().col);
    return lex_.take();
  }

 private:
  ASTPtr parse_term() {
    ASTPtr first = parse_factor();
    std::vector<ASTPtr> parts;
    while (is_punct("*")) {
      lex_.take();
      if (parts.empty()) parts.push_back(first);
      parts.push_back(parse_factor());
    }
    return parts.empty() ? first : OperatorAST::product(std::move(parts));
  }

  ASTPtr parse_factor() {
    ASTPtr base = parse_atom();
    if (is_punct("^")) {
      Token caret = lex_.take();
      if (lex_.peek().kind != Token::Kind::Number ||
          boost::multiprecision::denominator(lex_.peek().value) != 1)
        throw ParseError("expected a natural-number exponent after '^'",
                         caret.line, caret.col);
      Token e = lex_.take();
      int exp = boost::multiprecision::numerator(e.value).convert_to<int>();
      return OperatorAST::power(std::move(base), exp);
    }
    return base;
  }

  ASTPtr parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::Number:
        return OperatorAST::num(t.value);
      case Token::Kind::Ident: {
        if (t.text == "i") return OperatorAST::imag_unit();
        if (t.text == "comm" || t.text == "anti") {
          expect_punct("(");
          ASTPtr a = parse_expr();
          expect_punct(",");
          ASTPtr b = parse_expr();
          expect_punct(")");
          return t.text == "comm" ? OperatorAST::comm(a, b)
                                  : OperatorAST::anti(a, b);
        }
        for (const auto& g : generators_)
          if (g == t.text) return OperatorAST::generator(t.text);
        auto it = dsl_scalar_symbols().find(t.text);
        if (it != dsl_scalar_symbols().end())
          return OperatorAST::scalar_sym_node(it->second);
        throw ParseError("unknown name '" + t.text +
                             "' (not a declared generator or scalar symbol)",
                         t.line, t.col);
      }
      case Token::Kind::Punct:
        if (t.text == "(") {
          ASTPtr e = parse_expr();
          expect_punct(")");
          return e;
        }
        if (t.text == "-") return OperatorAST::neg(parse_atom());
        break;
      default:
        break;
    }
    throw ParseError("expected an expression, found '" + t.text + "'", t.line,
                     t.col);
  }

  Lexer lex_;
  std::vector<std::string> generators_;
};

// printing precedence: 1 = sum, 2 = product, 3 = power, 4 = atom
int prec(const OperatorAST& a) {
  switch (a.kind) {
    case OperatorAST::Kind::Sum:
      return 1;
    case OperatorAST::Kind::Product:
      return 2;
    case OperatorAST::Kind::Power:
      return 3;
    default:
      return 4;  // atoms, including Neg ('-' atom is itself an atom)
  }
}

void print_rec(const OperatorAST& a, std::ostream& os);

void print_child(const OperatorAST& c, int min_prec, std::ostream& os) {
  if (prec(c) < min_prec) {
    os << '(';
    print_rec(c, os);
    os << ')';
  } else {
    print_rec(c, os);
  }
}

void print_rec(const OperatorAST& a, std::ostream& os) {
  using K = OperatorAST::Kind;
  switch (a.kind) {
    case K::Generator:
      os << a.name;
      return;
    case K::Number: {
      os << boost::multiprecision::numerator(a.number).str();
      if (boost::multiprecision::denominator(a.number) != 1)
        os << '/' << boost::multiprecision::denominator(a.number).str();
      return;
    }
    case K::ImagUnit:
      os << 'i';
      return;
    case K::ScalarSym:
      os << kSymNames[static_cast<int>(a.scalar_sym)];
      return;
    case K::Sum:
      for (size_t k = 0; k < a.children.size(); ++k) {
        const OperatorAST& c = *a.children[k];
        if (k == 0) {
          print_child(c, 2, os);
        } else if (c.kind == K::Neg) {
          os << " - ";
          print_child(*c.children[0], 2, os);
        } else {
          os << " + ";
          print_child(c, 2, os);
        }
      }
      return;
    case K::Product:
      for (size_t k = 0; k < a.children.size(); ++k) {
        if (k) os << '*';
        print_child(*a.children[k], 3, os);
      }
      return;
    case K::Power:
      print_child(*a.children[0], 4, os);
      os << '^' << a.exponent;
      return;
    case K::Comm:
    case K::Anti:
      os << (a.kind == K::Comm ? "comm(" : "anti(");
      print_rec(*a.children[0], os);
      os << ", ";
      print_rec(*a.children[1], os);
      os << ')';
      return;
    case K::Neg:
      os << '-';
      print_child(*a.children[0], 4, os);
      return;
  }
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
  Catalog cat;
  Parser bootstrap(text, {});
  Token kw = bootstrap.expect_ident("'generators'");
  if (kw.text != "generators")
    throw ParseError("catalog must start with a 'generators:' declaration",
                     kw.line, kw.col);
  bootstrap.expect_punct(":");
  std::set<std::string> seen;
  while (!bootstrap.is_punct(";")) {
    Token name = bootstrap.expect_ident("a generator name");
    if (name.text == "i" || name.text == "comm" || name.text == "anti" ||
        dsl_scalar_symbols().count(name.text))
      throw ParseError("generator name '" + name.text +
                           "' collides with a reserved name",
                       name.line, name.col);
    if (!seen.insert(name.text).second)
      throw ParseError("duplicate generator '" + name.text + "'", name.line,
                       name.col);
    cat.generators.push_back(name.text);
  }
  bootstrap.expect_punct(";");
  if (cat.generators.empty())
    throw ParseError("empty generator list", kw.line, kw.col);

  // re-lex from scratch with the generator alphabet; skip past the decl
  Parser p(text, cat.generators);
  while (!p.is_punct(";")) p.take();
  p.take();

  std::set<std::string> labels;
  while (!p.at_end()) {
    Token label = p.expect_ident("a relation label");
    if (!labels.insert(label.text).second)
      throw ParseError("duplicate relation label '" + label.text + "'",
                       label.line, label.col);
    p.expect_punct(":");
    ASTPtr lhs = p.parse_expr();
    if (p.peek().kind != Token::Kind::EqEq)
      throw ParseError("expected '==', found '" + p.peek().text + "'",
                       p.peek().line, p.peek().col);
    p.take();
    ASTPtr rhs = p.parse_expr();
    p.expect_punct(";");
    cat.relations.push_back({label.text, lhs, rhs});
  }
  return cat;
}

ASTPtr parse_expression(const std::string& text,
                        const std::vector<std::string>& generators) {
  Parser p(text, generators);
  ASTPtr e = p.parse_expr();
  if (!p.at_end())
    throw ParseError("trailing input after expression: '" + p.peek().text +
                         "'",
                     p.peek().line, p.peek().col);
  return e;
}

std::string print_ast(const OperatorAST& ast) {
  std::ostringstream os;
  print_rec(ast, os);
  return os.str();
}

std::string print_catalog(const Catalog& catalog) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : catalog.generators) os << ' ' << g;
  os << ";\n";
  for (const auto& r : catalog.relations)
    os << r.label << ": " << print_ast(*r.lhs) << " == " << print_ast(*r.rhs)
       << ";\n";
  return os.str();
}

}  // namespace qalg
