#include "qalg/parampoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qalg {

const std::array<const char*, kNumSyms> kSymNames = {
    "hbar", "mu", "mu1", "mu2", "mu3", "E", "a2bar", "a1bar", "t"};

Mono mono_set_exp(Mono m, Sym s, int e) {
  if (e < 0 || e > static_cast<int>(kExpMask))
    throw std::overflow_error("monomial exponent out of range");
  int shift = kExpBits * static_cast<int>(s);
  m &= ~(kExpMask << shift);
  m |= static_cast<Mono>(e) << shift;
  return m;
}

int mono_total_degree(Mono m) {
  int d = 0;
  for (int i = 0; i < kNumSyms; ++i) d += static_cast<int>(m & kExpMask), m >>= kExpBits;
  return d;
}

std::string mono_str(Mono m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumSyms; ++i) {
    int e = mono_exp(m, static_cast<Sym>(i));
    if (e == 0) continue;
    if (!first) os << "*";
    os << kSymNames[i];
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "1";
  return os.str();
}

bool MonoLess::operator()(Mono a, Mono b) const {
  int da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  // lex from the first symbol (hbar) on equal degree
  for (int i = 0; i < kNumSyms; ++i) {
    int ea = mono_exp(a, static_cast<Sym>(i));
    int eb = mono_exp(b, static_cast<Sym>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

ParamPoly ParamPoly::constant(GaussRat c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(Mono{0}, std::move(c));
  return p;
}

ParamPoly ParamPoly::symbol(Sym s, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  ParamPoly p;
  if (power == 0) return constant(1);
  p.terms_.emplace(mono_set_exp(0, s, power), GaussRat::one());
  return p;
}

ParamPoly ParamPoly::term(Mono m, GaussRat c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == GaussRat::one();
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

GaussRat ParamPoly::constant_part() const {
  auto it = terms_.find(Mono{0});
  return it == terms_.end() ? GaussRat::zero() : it->second;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_total_degree(terms_.rbegin()->first);  // graded order: last term
}

int ParamPoly::degree_in(Sym s) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_exp(m, s));
  return terms_.empty() ? -1 : d;
}

bool ParamPoly::depends_on(Sym s) const {
  for (const auto& [m, c] : terms_)
    if (mono_exp(m, s) > 0) return true;
  return false;
}

Mono ParamPoly::leading_mono() const {
  if (terms_.empty()) throw std::domain_error("leading_mono of zero");
  return terms_.rbegin()->first;
}

GaussRat ParamPoly::leading_coeff() const {
  if (terms_.empty()) return GaussRat::zero();
  return terms_.rbegin()->second;
}

void ParamPoly::add_term(Mono m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

ParamPoly ParamPoly::scaled(const GaussRat& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

ParamPoly ParamPoly::substitute(const std::map<Sym, GaussRat>& values,
                                const std::map<Sym, Sym>& renames) const {
  ParamPoly r;
  for (const auto& [m, c] : terms_) {
    GaussRat coeff = c;
    Mono nm = 0;
    for (int i = 0; i < kNumSyms; ++i) {
      Sym s = static_cast<Sym>(i);
      int e = mono_exp(m, s);
      if (e == 0) continue;
      if (auto it = values.find(s); it != values.end()) {
        GaussRat v = GaussRat::one();
        for (int k = 0; k < e; ++k) v *= it->second;
        coeff *= v;
      } else if (auto jt = renames.find(s); jt != renames.end()) {
        nm = mono_set_exp(nm, jt->second, mono_exp(nm, jt->second) + e);
      } else {
        nm = mono_set_exp(nm, s, mono_exp(nm, s) + e);
      }
    }
    r.add_term(nm, coeff);
  }
  return r;
}

ParamPoly ParamPoly::substitute_poly(Sym s, const ParamPoly& value) const {
  // Horner in s would need sorting by s-degree; plain power expansion is fine
  // at the degrees seen here.
  ParamPoly r;
  std::vector<ParamPoly> powers = {ParamPoly::constant(1)};
  for (const auto& [m, c] : terms_) {
    int e = mono_exp(m, s);
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * value);
    Mono rest = mono_set_exp(m, s, 0);
    r += powers[e] * ParamPoly::term(rest, c);
  }
  return r;
}

GaussRat ParamPoly::evaluate(const std::map<Sym, GaussRat>& values) const {
  GaussRat total;
  for (const auto& [m, c] : terms_) {
    GaussRat v = c;
    for (int i = 0; i < kNumSyms; ++i) {
      Sym s = static_cast<Sym>(i);
      int e = mono_exp(m, s);
      if (e == 0) continue;
      auto it = values.find(s);
      if (it == values.end())
        throw std::invalid_argument(std::string("evaluate: unbound symbol ") +
                                    kSymNames[i]);
      for (int k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

bool ParamPoly::try_divide(const ParamPoly& divisor, ParamPoly& quotient) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  ParamPoly rem = *this;
  ParamPoly q;
  const Mono dm = divisor.leading_mono();
  const GaussRat dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    Mono rm = rem.leading_mono();
    // check componentwise divisibility of the leading monomials
    Mono qm = 0;
    bool ok = true;
    for (int i = 0; i < kNumSyms && ok; ++i) {
      Sym s = static_cast<Sym>(i);
      int e = mono_exp(rm, s) - mono_exp(dm, s);
      if (e < 0)
        ok = false;
      else
        qm = mono_set_exp(qm, s, e);
    }
    if (!ok) return false;
    GaussRat qc = rem.leading_coeff() / dc;
    ParamPoly t = ParamPoly::term(qm, qc);
    q += t;
    rem -= t * divisor;
  }
  quotient = std::move(q);
  return true;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest-order terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    if (it->first == 0)
      os << it->second.str();
    else if (it->second == GaussRat::one())
      os << mono_str(it->first);
    else
      os << it->second.str() << "*" << mono_str(it->first);
    first = false;
  }
  return os.str();
}

namespace {

// -- multivariate gcd: content/primitive-part recursion with a primitive
//    polynomial remainder sequence in the top symbol ---------------------

Sym top_symbol(const ParamPoly& p) {
  for (int i = kNumSyms - 1; i >= 0; --i)
    if (p.depends_on(static_cast<Sym>(i))) return static_cast<Sym>(i);
  return Sym::Hbar;  // caller checks is_constant first
}

// coefficients of p viewed as a univariate polynomial in s
std::vector<ParamPoly> coeffs_in(const ParamPoly& p, Sym s) {
  int d = p.degree_in(s);
  std::vector<ParamPoly> cs(static_cast<std::size_t>(d + 1));
  for (const auto& [m, c] : p.terms()) {
    int e = mono_exp(m, s);
    cs[static_cast<std::size_t>(e)].add_term(mono_set_exp(m, s, 0), c);
  }
  return cs;
}

ParamPoly from_coeffs(const std::vector<ParamPoly>& cs, Sym s) {
  ParamPoly r;
  for (std::size_t e = 0; e < cs.size(); ++e)
    r += cs[e] * ParamPoly::symbol(s, static_cast<int>(e));
  return r;
}

ParamPoly monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coeff().inv());
}

ParamPoly gcd_impl(ParamPoly a, ParamPoly b);

ParamPoly content_in(const ParamPoly& p, Sym s) {
  ParamPoly g;
  for (const auto& c : coeffs_in(p, s)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly exact_div(const ParamPoly& p, const ParamPoly& d) {
  ParamPoly q;
  if (!p.try_divide(d, q)) throw std::logic_error("gcd: inexact division");
  return q;
}

// pseudo-remainder of a by b in s (deg_s a >= deg_s b > 0 assumed)
ParamPoly pseudo_rem(ParamPoly a, const ParamPoly& b, Sym s) {
  int db = b.degree_in(s);
  auto bc = coeffs_in(b, s);
  const ParamPoly& lb = bc.back();
  while (!a.is_zero() && a.degree_in(s) >= db) {
    int da = a.degree_in(s);
    auto ac = coeffs_in(a, s);
    const ParamPoly& la = ac.back();
    // a <- lb*a - la*s^(da-db)*b
    a = lb * a - la * ParamPoly::symbol(s, da - db) * b;
  }
  return a;
}

ParamPoly gcd_impl(ParamPoly a, ParamPoly b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly::constant(1);
  Sym s = top_symbol(a);
  Sym sb = top_symbol(b);
  if (static_cast<int>(sb) > static_cast<int>(s)) s = sb;
  if (!a.depends_on(s) || !b.depends_on(s)) {
    // one of them is free of the top symbol: gcd divides that one's content
    const ParamPoly& free = a.depends_on(s) ? b : a;
    const ParamPoly& other = a.depends_on(s) ? a : b;
    return gcd_impl(free, content_in(other, s));
  }
  ParamPoly ca = content_in(a, s);
  ParamPoly cb = content_in(b, s);
  ParamPoly pa = exact_div(a, ca);
  ParamPoly pb = exact_div(b, cb);
  if (pa.degree_in(s) < pb.degree_in(s)) std::swap(pa, pb);
  // primitive PRS
  while (true) {
    ParamPoly r = pseudo_rem(pa, pb, s);
    if (r.is_zero()) break;
    if (!r.depends_on(s)) return monic(gcd_impl(ca, cb));  // coprime in s
    r = exact_div(r, content_in(r, s));
    pa = std::move(pb);
    pb = std::move(r);
  }
  return monic(gcd_impl(ca, cb) * pb);
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  return gcd_impl(a, b);
}

}  // namespace qalg
