#include "qalg/engine.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace qalg {

Binding standard_binding(const std::vector<std::string>& generators,
                         const ModelParams& p, B1Variant b1) {
  Binding bind;
  for (const auto& g : generators) {
    auto name = integral_from_string(g);
    if (!name)
      throw std::invalid_argument("no built-in operator for generator '" + g +
                                  "'");
    bind.emplace(g, build_operator(*name, p, b1));
  }
  return bind;
}

OperatorExpr evaluate_ast(const OperatorAST& ast, const Binding& bind,
                          const ModelParams& p) {
  using K = OperatorAST::Kind;
  switch (ast.kind) {
    case K::Generator: {
      auto it = bind.find(ast.name);
      if (it == bind.end())
        throw std::invalid_argument("unbound generator '" + ast.name + "'");
      return it->second;
    }
    case K::Number:
      return OperatorExpr::scalar(ParamRat(GaussRat(ast.number)));
    case K::ImagUnit:
      return OperatorExpr::scalar(ParamRat(GaussRat::i()));
    case K::ScalarSym:
      return OperatorExpr::scalar(p.param(ast.scalar_sym));
    case K::Sum: {
      OperatorExpr acc;
      for (const auto& c : ast.children) acc += evaluate_ast(*c, bind, p);
      return acc;
    }
    case K::Product: {
      OperatorExpr acc = evaluate_ast(*ast.children[0], bind, p);
      for (size_t k = 1; k < ast.children.size(); ++k)
        acc = compose(acc, evaluate_ast(*ast.children[k], bind, p));
      return acc;
    }
    case K::Power:
      return pow(evaluate_ast(*ast.children[0], bind, p), ast.exponent);
    case K::Comm:
      return commutator(evaluate_ast(*ast.children[0], bind, p),
                        evaluate_ast(*ast.children[1], bind, p));
    case K::Anti:
      return anticommutator(evaluate_ast(*ast.children[0], bind, p),
                            evaluate_ast(*ast.children[1], bind, p));
    case K::Neg:
      return evaluate_ast(*ast.children[0], bind, p).scaled(ParamRat(-1));
  }
  throw std::logic_error("unreachable AST kind");
}

namespace {

std::string residual_summary(const OperatorExpr& r) {
  if (r.is_zero()) return "";
  std::ostringstream os;
  os << r.term_count() << " terms, derivative degree " << r.degree()
     << "; leading:";
  int shown = 0;
  for (auto it = r.terms().rbegin(); it != r.terms().rend() && shown < 3;
       ++it, ++shown) {
    std::string c = it->second.str();
    if (c.size() > 120) c = c.substr(0, 117) + "...";
    os << " [" << dmono_str(it->first) << "] " << c << ";";
  }
  return os.str();
}

}  // namespace

Residual verify_relation(const RelationSchema& rel, const Binding& bind,
                         const ModelParams& p) {
  OperatorExpr res = evaluate_ast(*rel.lhs, bind, p);
  res -= evaluate_ast(*rel.rhs, bind, p);
  bool zero = res.is_zero();
  std::string sum = residual_summary(res);
  return Residual{rel.label, std::move(res), zero, std::move(sum)};
}

std::string fit_status_str(FitOutcome::Status s) {
  switch (s) {
    case FitOutcome::Status::Unique:
      return "unique";
    case FitOutcome::Status::Underdetermined:
      return "underdetermined";
    case FitOutcome::Status::NoSolution:
      return "no-solution";
  }
  return "?";
}

namespace {

// coordinate key for the linear system: derivative word, r flag, monomial
using CoordKey = std::uint64_t;
inline CoordKey coord_key(DMono d, int rflag, SMono m) {
  return (static_cast<CoordKey>(d) << 33) |
         (static_cast<CoordKey>(rflag) << 32) | m;
}

using CoordVec = std::map<CoordKey, ParamRat>;

// Expands an operator into exact coordinates over a per-derivative common
// denominator shared by all operators in the fit.
CoordVec vectorize(const OperatorExpr& op,
                   const std::map<DMono, std::array<int, 4>>& common_den) {
  CoordVec v;
  for (const auto& [d, coeff] : op.terms()) {
    const auto& target = common_den.at(d);
    SpatialPoly mult = SpatialPoly::monomial(
        smono(target[0] - coeff.den()[0], target[1] - coeff.den()[1],
              target[2] - coeff.den()[2]));
    for (int k = target[3] - coeff.den()[3]; k > 0; --k)
      mult = mult * SpatialPoly::s();
    SpatialPoly na = coeff.a() * mult;
    SpatialPoly nb = coeff.b() * mult;
    for (const auto& [m, c] : na.terms()) v[coord_key(d, 0, m)] = c;
    for (const auto& [m, c] : nb.terms()) v[coord_key(d, 1, m)] = c;
  }
  return v;
}

}  // namespace

FitOutcome fit_structure_constants(const OperatorExpr& target,
                                   const std::vector<BasisElement>& basis) {
  const size_t n = basis.size();

  std::map<DMono, std::array<int, 4>> common_den;
  auto widen = [&common_den](const OperatorExpr& op) {
    for (const auto& [d, coeff] : op.terms()) {
      auto& cur = common_den.try_emplace(d, std::array<int, 4>{0, 0, 0, 0})
                      .first->second;
      for (int k = 0; k < 4; ++k) cur[k] = std::max(cur[k], coeff.den()[k]);
    }
  };
  widen(target);
  for (const auto& b : basis) widen(b.op);

  std::vector<CoordVec> cols(n);
  for (size_t j = 0; j < n; ++j) cols[j] = vectorize(basis[j].op, common_den);
  CoordVec rhs = vectorize(target, common_den);

  std::set<CoordKey> keys;
  for (const auto& [k, c] : rhs) keys.insert(k);
  for (const auto& col : cols)
    for (const auto& [k, c] : col) keys.insert(k);

  // incremental reduced row echelon form; each pivot row is normalized and
  // eliminated from the others, so at most n rows are retained
  std::vector<std::vector<ParamRat>> pivots;  // rows of length n+1
  std::vector<size_t> pivot_col;

  FitOutcome out;
  for (CoordKey key : keys) {
    std::vector<ParamRat> row(n + 1);
    for (size_t j = 0; j < n; ++j) {
      auto it = cols[j].find(key);
      if (it != cols[j].end()) row[j] = it->second;
    }
    auto rt = rhs.find(key);
    if (rt != rhs.end()) row[n] = rt->second;

    for (size_t r = 0; r < pivots.size(); ++r) {
      const ParamRat& f = row[pivot_col[r]];
      if (f.is_zero()) continue;
      ParamRat fac = f;  // row[pivot_col[r]] changes below; copy first
      for (size_t j = 0; j <= n; ++j)
        if (!pivots[r][j].is_zero()) row[j] -= fac * pivots[r][j];
    }
    size_t lead = n + 1;
    for (size_t j = 0; j < n; ++j)
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == n + 1) {
      if (!row[n].is_zero()) {
        out.status = FitOutcome::Status::NoSolution;
        return out;
      }
      continue;
    }
    ParamRat inv = row[lead].inv();
    for (size_t j = 0; j <= n; ++j)
      if (!row[j].is_zero()) row[j] *= inv;
    for (size_t r = 0; r < pivots.size(); ++r) {
      const ParamRat& f = pivots[r][lead];
      if (f.is_zero()) continue;
      ParamRat fac = f;
      for (size_t j = 0; j <= n; ++j)
        if (!row[j].is_zero()) pivots[r][j] -= fac * row[j];
    }
    pivots.push_back(std::move(row));
    pivot_col.push_back(lead);
  }

  out.nullity = static_cast<int>(n - pivots.size());
  out.status = out.nullity == 0 ? FitOutcome::Status::Unique
                                : FitOutcome::Status::Underdetermined;
  std::vector<ParamRat> sol(n);
  for (size_t r = 0; r < pivots.size(); ++r) sol[pivot_col[r]] = pivots[r][n];
  for (size_t j = 0; j < n; ++j)
    out.constants.emplace_back(basis[j].label, sol[j]);
  return out;
}

namespace {

bool contains_generator(const OperatorAST& a) {
  if (a.kind == OperatorAST::Kind::Generator) return true;
  for (const auto& c : a.children)
    if (contains_generator(*c)) return true;
  return false;
}

void collect_generator_names(const OperatorAST& a, std::set<std::string>& out) {
  if (a.kind == OperatorAST::Kind::Generator) out.insert(a.name);
  for (const auto& c : a.children) collect_generator_names(*c, out);
}

using Word = std::vector<ASTPtr>;  // operator-bearing factors, in order

// Expands an AST into the operator words of its additive terms, dropping
// every scalar factor.  comm/anti nodes stay atomic.
std::vector<Word> expand_words(const ASTPtr& node) {
  using K = OperatorAST::Kind;
  if (!contains_generator(*node)) return {Word{}};
  switch (node->kind) {
    case K::Generator:
    case K::Comm:
    case K::Anti:
    case K::Power:
      return {Word{node}};
    case K::Neg:
      return expand_words(node->children[0]);
    case K::Sum: {
      std::vector<Word> out;
      for (const auto& c : node->children)
        for (auto& w : expand_words(c)) out.push_back(std::move(w));
      return out;
    }
    case K::Product: {
      std::vector<Word> out{Word{}};
      for (const auto& c : node->children) {
        std::vector<Word> parts = expand_words(c);
        std::vector<Word> next;
        for (const auto& head : out)
          for (const auto& tail : parts) {
            Word w = head;
            w.insert(w.end(), tail.begin(), tail.end());
            next.push_back(std::move(w));
          }
        out = std::move(next);
      }
      return out;
    }
    default:
      return {Word{}};
  }
}

// Splits off central H factors (they commute with everything) and returns
// the remaining word plus the accumulated H power.
std::pair<Word, int> split_h(const Word& w) {
  Word rest;
  int hp = 0;
  for (const auto& f : w) {
    if (f->kind == OperatorAST::Kind::Generator && f->name == "H") {
      ++hp;
    } else if (f->kind == OperatorAST::Kind::Power &&
               f->children[0]->kind == OperatorAST::Kind::Generator &&
               f->children[0]->name == "H") {
      hp += f->exponent;
    } else {
      rest.push_back(f);
    }
  }
  return {rest, hp};
}

std::string word_label(const Word& rest, int hp) {
  std::ostringstream os;
  for (size_t k = 0; k < rest.size(); ++k) {
    if (k) os << '*';
    os << print_ast(*rest[k]);
  }
  if (hp > 0) {
    if (!rest.empty()) os << '*';
    os << (hp == 1 ? "H" : "H^" + std::to_string(hp));
  }
  if (rest.empty() && hp == 0) os << '1';
  return os.str();
}

}  // namespace

std::vector<BasisElement> refit_basis(const RelationSchema& rel,
                                      const Binding& bind,
                                      const ModelParams& p) {
  std::set<std::string> gens;
  collect_generator_names(*rel.lhs, gens);
  collect_generator_names(*rel.rhs, gens);
  bool has_h = gens.erase("H") != 0;
  std::vector<std::string> glist(gens.begin(), gens.end());

  std::vector<BasisElement> basis;
  std::set<std::string> seen;
  // drop words that are scalar multiples of one already present (e.g.
  // anti(X, Y) = 2*X*Y when X and Y commute), so the basis stays independent
  auto proportional = [](const OperatorExpr& f, const OperatorExpr& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    auto ft = f.terms().begin();
    auto gt = g.terms().find(ft->first);
    if (gt == g.terms().end()) return false;
    const SpatialPoly& fp = ft->second.a().is_zero() ? ft->second.b() : ft->second.a();
    const SpatialPoly& gp = ft->second.a().is_zero() ? gt->second.b() : gt->second.a();
    if (fp.is_zero() || gp.is_zero()) return false;
    auto fm = fp.terms().begin();
    auto gm = gp.terms().find(fm->first);
    if (gm == gp.terms().end() || gm->second.is_zero()) return false;
    return f == g.scaled(fm->second / gm->second);
  };
  auto add = [&](const std::string& label, const OperatorExpr& op) {
    if (!seen.insert(label).second) return;
    for (const auto& b : basis)
      if (proportional(op, b.op)) return;
    basis.push_back({label, op});
  };

  // the relation's own monomials (highest H power also sets the extension)
  int hmax = 2;
  std::vector<std::pair<Word, int>> own;
  for (const auto& w : expand_words(rel.rhs)) {
    auto [rest, hp] = split_h(w);
    hmax = std::max(hmax, hp);
    own.emplace_back(std::move(rest), hp);
  }
  OperatorExpr h_op = has_h ? bind.at("H") : OperatorExpr::identity();
  auto with_h = [&](const OperatorExpr& op, int hp) {
    return hp == 0 ? op : compose(op, pow(h_op, hp));
  };
  for (const auto& [rest, hp] : own) {
    OperatorExpr op = OperatorExpr::identity();
    for (const auto& f : rest) op = compose(op, evaluate_ast(*f, bind, p));
    add(word_label(rest, hp), with_h(op, hp));
  }

  // standard extension: degree-<=2 monomials in the non-central generators
  // times powers of H
  std::vector<std::pair<std::string, OperatorExpr>> words;
  words.emplace_back("", OperatorExpr::identity());
  for (const auto& g : glist) words.emplace_back(g, bind.at(g));
  for (size_t i = 0; i < glist.size(); ++i) {
    const OperatorExpr& gi = bind.at(glist[i]);
    words.emplace_back(glist[i] + "^2", compose(gi, gi));
    for (size_t j = i + 1; j < glist.size(); ++j)
      words.emplace_back("anti(" + glist[i] + ", " + glist[j] + ")",
                         anticommutator(gi, bind.at(glist[j])));
  }
  for (const auto& [wl, op] : words)
    for (int hp = 0; hp <= (has_h ? hmax : 0); ++hp) {
      std::string label = wl;
      if (hp > 0) {
        if (!label.empty()) label += '*';
        label += hp == 1 ? "H" : "H^" + std::to_string(hp);
      }
      if (label.empty()) label = "1";
      add(label, with_h(op, hp));
    }
  return basis;
}

int env_thread_cap() {
  const char* v = std::getenv("QALG_THREADS");
  if (!v) return 0;
  int n = std::atoi(v);
  return n > 0 ? n : 0;
}

bool CatalogReport::all_ok() const {
  for (const auto& r : results)
    if (!r.ok()) return false;
  return true;
}

CatalogReport verify_catalog(const Catalog& cat, const ModelParams& p,
                             bool auto_refit, int threads) {
  Binding bind = standard_binding(cat.generators, p);

  // flag verbatim repeats up front
  std::vector<std::string> texts;
  texts.reserve(cat.relations.size());
  for (const auto& r : cat.relations)
    texts.push_back(print_ast(*r.lhs) + " == " + print_ast(*r.rhs));

  CatalogReport report;
  report.results.resize(cat.relations.size());
  for (size_t i = 0; i < cat.relations.size(); ++i) {
    report.results[i].label = cat.relations[i].label;
    for (size_t j = 0; j < i; ++j)
      if (texts[j] == texts[i]) {
        report.results[i].duplicate_of = cat.relations[j].label;
        break;
      }
  }

  auto work = [&](size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    RelationResult& out = report.results[i];
    const RelationSchema& rel = cat.relations[i];
    Residual res = verify_relation(rel, bind, p);
    out.zero_residual = res.is_zero;
    out.residual_terms = res.residual.term_count();
    out.residual_summary = res.summary;
    if (!res.is_zero && auto_refit) {
      out.refit_attempted = true;
      OperatorExpr target = evaluate_ast(*rel.lhs, bind, p);
      std::vector<BasisElement> basis = refit_basis(rel, bind, p);
      out.fit = fit_structure_constants(target, basis);
      if (out.fit.status != FitOutcome::Status::NoSolution) {
        OperatorExpr recon;
        size_t j = 0;
        for (const auto& [label, c] : out.fit.constants) {
          if (!c.is_zero()) recon += basis[j].op.scaled(c);
          ++j;
        }
        out.fit_verified = (target - recon).is_zero();
      }
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  };

  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  if (int cap = env_thread_cap(); cap > 0)
    n = std::min(n, static_cast<unsigned>(cap));
  n = std::min<unsigned>(n, cat.relations.size());

  if (n <= 1) {
    for (size_t i = 0; i < cat.relations.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < cat.relations.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace qalg
