#include "qalg/operator.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace qalg {

namespace {
const char* kAxisNames[3] = {"x", "y", "z"};
}

std::string smono_str(SMono m) {
  std::ostringstream os;
  bool first = true;
  for (int ax = 0; ax < 3; ++ax) {
    int e = smono_exp(m, ax);
    if (e == 0) continue;
    if (!first) os << "*";
    os << kAxisNames[ax];
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "1";
  return os.str();
}

std::string dmono_str(DMono m) {
  std::ostringstream os;
  bool first = true;
  for (int ax = 0; ax < 3; ++ax) {
    int e = dmono_exp(m, ax);
    if (e == 0) continue;
    if (!first) os << " ";
    os << "d" << kAxisNames[ax];
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "1";
  return os.str();
}

// ---------------------------------------------------------------- SpatialPoly

SpatialPoly SpatialPoly::constant(ParamRat c) {
  SpatialPoly p;
  if (!c.is_zero()) p.terms_.emplace(smono(0, 0, 0), std::move(c));
  return p;
}

SpatialPoly SpatialPoly::monomial(SMono m, ParamRat c) {
  SpatialPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

SpatialPoly SpatialPoly::coordinate(int axis, int power) {
  SMono m = 0;
  switch (axis) {
    case 0: m = smono(power, 0, 0); break;
    case 1: m = smono(0, power, 0); break;
    case 2: m = smono(0, 0, power); break;
    default: throw std::invalid_argument("axis");
  }
  return monomial(m);
}

SpatialPoly SpatialPoly::s() {
  SpatialPoly p;
  p.terms_.emplace(smono(2, 0, 0), ParamRat(1));
  p.terms_.emplace(smono(0, 2, 0), ParamRat(1));
  p.terms_.emplace(smono(0, 0, 2), ParamRat(1));
  return p;
}

void SpatialPoly::add_term(SMono m, const ParamRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpatialPoly SpatialPoly::operator-() const {
  SpatialPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SpatialPoly& SpatialPoly::operator+=(const SpatialPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SpatialPoly& SpatialPoly::operator-=(const SpatialPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SpatialPoly operator*(const SpatialPoly& a, const SpatialPoly& b) {
  SpatialPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

SpatialPoly SpatialPoly::scaled(const ParamRat& c) const {
  SpatialPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

SpatialPoly SpatialPoly::derivative(int axis) const {
  SpatialPoly r;
  for (const auto& [m, c] : terms_) {
    int e = smono_exp(m, axis);
    if (e == 0) continue;
    SMono nm = m - (SMono{1} << smono_shift(axis));
    r.add_term(nm, c * ParamRat(e));
  }
  return r;
}

int SpatialPoly::min_exp(int axis) const {
  int mn = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) mn = std::min(mn, smono_exp(m, axis));
  return terms_.empty() ? 0 : mn;
}

SpatialPoly SpatialPoly::shifted(int axis, int delta) const {
  SpatialPoly r;
  for (const auto& [m, c] : terms_) {
    int e = smono_exp(m, axis) + delta;
    if (e < 0) throw std::logic_error("SpatialPoly::shifted: negative exponent");
    SMono nm = m + static_cast<SMono>(delta) * (SMono{1} << smono_shift(axis));
    r.terms_.emplace(nm, c);
  }
  return r;
}

bool SpatialPoly::try_divide_s(SpatialPoly& quotient) const {
  // Long division by x^2+y^2+z^2, pivoting on x^2.  Keys are x-major, so the
  // map's last term always has maximal x-degree, and elimination only
  // produces terms with strictly smaller keys.
  SpatialPoly rem = *this;
  SpatialPoly q;
  while (!rem.is_zero()) {
    auto lead = std::prev(rem.terms_.end());
    SMono m = lead->first;
    if (smono_exp(m, 0) < 2) return false;
    SMono qm = m - smono(2, 0, 0);
    ParamRat qc = std::move(lead->second);
    rem.terms_.erase(lead);
    rem.add_term(qm + smono(0, 2, 0), -qc);
    rem.add_term(qm + smono(0, 0, 2), -qc);
    q.terms_.emplace(qm, std::move(qc));
  }
  quotient = std::move(q);
  return true;
}

ParamRat SpatialPoly::eval(const std::array<GaussRat, 3>& pt,
                           const std::map<Sym, GaussRat>& params) const {
  ParamRat total;
  for (const auto& [m, c] : terms_) {
    GaussRat v = GaussRat::one();
    for (int ax = 0; ax < 3; ++ax)
      for (int k = 0; k < smono_exp(m, ax); ++k) v *= pt[ax];
    total += c.substitute(params) * ParamRat(v);
  }
  return total;
}

SpatialPoly SpatialPoly::substitute(const std::map<Sym, GaussRat>& values) const {
  SpatialPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(values));
  return r;
}

std::string SpatialPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (m != 0) os << "*" << smono_str(m);
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------- SpatialCoeff

SpatialCoeff SpatialCoeff::make(ParamRat c, SMono num, int r_power,
                                std::array<int, 4> den) {
  if (r_power < 0 || r_power > 1)
    throw std::invalid_argument("r power must be 0 or 1");
  SpatialPoly p = SpatialPoly::monomial(num, std::move(c));
  if (r_power == 0) return SpatialCoeff(std::move(p), SpatialPoly(), den);
  return SpatialCoeff(SpatialPoly(), std::move(p), den);
}

void SpatialCoeff::reduce() {
  if (a_.is_zero() && b_.is_zero()) {
    den_ = {0, 0, 0, 0};
    return;
  }
  // cancel coordinate monomials
  for (int ax = 0; ax < 3; ++ax) {
    if (den_[ax] == 0) continue;
    int mn = std::numeric_limits<int>::max();
    if (!a_.is_zero()) mn = std::min(mn, a_.min_exp(ax));
    if (!b_.is_zero()) mn = std::min(mn, b_.min_exp(ax));
    int c = std::min(mn, den_[ax]);
    if (c > 0) {
      a_ = a_.shifted(ax, -c);
      b_ = b_.shifted(ax, -c);
      den_[ax] -= c;
    }
  }
  // cancel powers of s
  while (den_[3] > 0) {
    SpatialPoly qa, qb;
    bool oka = a_.is_zero() || a_.try_divide_s(qa);
    bool okb = b_.is_zero() || b_.try_divide_s(qb);
    if (!(oka && okb)) break;
    a_ = std::move(qa);
    b_ = std::move(qb);
    --den_[3];
  }
}

SpatialCoeff SpatialCoeff::operator-() const {
  SpatialCoeff r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {

SpatialPoly s_power(int n) {
  SpatialPoly p = SpatialPoly::constant(ParamRat(1));
  for (int i = 0; i < n; ++i) p = p * SpatialPoly::s();
  return p;
}

// multiplier bringing den d to the common den m (componentwise m >= d)
SpatialPoly den_fill(const std::array<int, 4>& d, const std::array<int, 4>& m) {
  SpatialPoly p = SpatialPoly::monomial(
      smono(m[0] - d[0], m[1] - d[1], m[2] - d[2]));
  if (m[3] > d[3]) p = p * s_power(m[3] - d[3]);
  return p;
}

}  // namespace

SpatialCoeff operator+(const SpatialCoeff& p, const SpatialCoeff& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  std::array<int, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = std::max(p.den_[i], q.den_[i]);
  SpatialPoly fp = den_fill(p.den_, m);
  SpatialPoly fq = den_fill(q.den_, m);
  return SpatialCoeff(p.a_ * fp + q.a_ * fq, p.b_ * fp + q.b_ * fq, m);
}

SpatialCoeff operator-(const SpatialCoeff& p, const SpatialCoeff& q) {
  return p + (-q);
}

void SpatialCoeff::add_assign_raw(const SpatialCoeff& o) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = o;
    return;
  }
  std::array<int, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = std::max(den_[i], o.den_[i]);
  if (m != den_) {
    SpatialPoly f = den_fill(den_, m);
    a_ = a_ * f;
    b_ = b_ * f;
    den_ = m;
  }
  if (m == o.den_) {
    a_ += o.a_;
    b_ += o.b_;
  } else {
    SpatialPoly f = den_fill(o.den_, m);
    a_ += o.a_ * f;
    b_ += o.b_ * f;
  }
}

SpatialCoeff operator*(const SpatialCoeff& p, const SpatialCoeff& q) {
  if (p.is_zero() || q.is_zero()) return SpatialCoeff();
  std::array<int, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = p.den_[i] + q.den_[i];
  // (a1+b1 r)(a2+b2 r) = (a1 a2 + b1 b2 s) + (a1 b2 + b1 a2) r
  SpatialPoly a = p.a_ * q.a_;
  if (!p.b_.is_zero() && !q.b_.is_zero()) a += p.b_ * q.b_ * SpatialPoly::s();
  SpatialPoly b = p.a_ * q.b_ + p.b_ * q.a_;
  return SpatialCoeff(std::move(a), std::move(b), m);
}

SpatialCoeff SpatialCoeff::scaled(const ParamRat& c) const {
  if (c.is_zero()) return SpatialCoeff();
  SpatialCoeff r = *this;
  r.a_ = r.a_.scaled(c);
  r.b_ = r.b_.scaled(c);
  return r;
}

SpatialCoeff SpatialCoeff::derivative(int axis) const {
  if (is_zero()) return SpatialCoeff();
  // d/dxi (a + b r)/(x^d0 y^d1 z^d2 s^d3):
  //   numerator over den * xi * s:
  //   a' = (da)*xi*s - d_i*s*a - 2*d3*xi^2*a
  //   b' = (db)*xi*s + b*xi^2 - d_i*s*b - 2*d3*xi^2*b     (dr/dxi = xi*r/s)
  const int di = den_[axis];
  const int ds = den_[3];
  SpatialPoly xi = SpatialPoly::coordinate(axis);
  SpatialPoly xi2 = SpatialPoly::coordinate(axis, 2);
  SpatialPoly sp = SpatialPoly::s();
  SpatialPoly xis = xi * sp;

  SpatialPoly na = a_.derivative(axis) * xis;
  SpatialPoly nb = b_.derivative(axis) * xis + b_ * xi2;
  if (di != 0) {
    na -= (sp * a_).scaled(ParamRat(di));
    nb -= (sp * b_).scaled(ParamRat(di));
  }
  if (ds != 0) {
    na -= (xi2 * a_).scaled(ParamRat(2 * ds));
    nb -= (xi2 * b_).scaled(ParamRat(2 * ds));
  }
  std::array<int, 4> nden = den_;
  nden[axis] += 1;
  nden[3] += 1;
  return SpatialCoeff(std::move(na), std::move(nb), nden);
}

SpatialCoeff SpatialCoeff::substitute(const std::map<Sym, GaussRat>& values) const {
  return SpatialCoeff(a_.substitute(values), b_.substitute(values), den_);
}

std::string SpatialCoeff::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(" << a_.str();
  if (!b_.is_zero()) os << " + (" << b_.str() << ")*r";
  os << ")";
  if (den_ != std::array<int, 4>{0, 0, 0, 0}) {
    os << "/(" << smono_str(smono(den_[0], den_[1], den_[2]));
    if (den_[3] > 0) os << "*s^" << den_[3];
    os << ")";
  }
  return os.str();
}

// --------------------------------------------------------------- OperatorExpr

OperatorExpr OperatorExpr::identity() {
  return multiplication(SpatialCoeff::constant(ParamRat(1)));
}

OperatorExpr OperatorExpr::multiplication(SpatialCoeff c) {
  OperatorExpr f;
  if (!c.is_zero()) f.terms_.emplace(dmono(0, 0, 0), std::move(c));
  return f;
}

OperatorExpr OperatorExpr::scalar(ParamRat c) {
  return multiplication(SpatialCoeff::constant(std::move(c)));
}

OperatorExpr OperatorExpr::partial(int axis, int order) {
  OperatorExpr f;
  DMono d = 0;
  switch (axis) {
    case 0: d = dmono(order, 0, 0); break;
    case 1: d = dmono(0, order, 0); break;
    case 2: d = dmono(0, 0, order); break;
    default: throw std::invalid_argument("axis");
  }
  f.terms_.emplace(d, SpatialCoeff::constant(ParamRat(1)));
  return f;
}

int OperatorExpr::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, dmono_order(m));
  return d;
}

void OperatorExpr::add_term(DMono d, const SpatialCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorExpr OperatorExpr::scaled(const ParamRat& c) const {
  OperatorExpr r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co.scaled(c));
  return r;
}

OperatorExpr OperatorExpr::substitute(const std::map<Sym, GaussRat>& values) const {
  OperatorExpr r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(values));
  return r;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << "\n + ";
    os << c.str();
    if (m != 0) os << " * " << dmono_str(m);
    first = false;
  }
  return os.str();
}

namespace {

Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// all gamma <= alpha componentwise, with derivative tables built lazily
struct DerivTable {
  std::map<DMono, SpatialCoeff> cache;
  const SpatialCoeff& get(DMono g) {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    // find an axis to step down
    for (int ax = 0; ax < 3; ++ax) {
      int e = dmono_exp(g, ax);
      if (e > 0) {
        DMono prev = g - (DMono{1} << (10 * ax));
        SpatialCoeff d = get(prev).derivative(ax);
        return cache.emplace(g, std::move(d)).first->second;
      }
    }
    throw std::logic_error("DerivTable: base entry missing");
  }
};

}  // namespace

OperatorExpr compose(const OperatorExpr& f, const OperatorExpr& g) {
  // Accumulate per derivative index without canonical reduction, reduce once
  // per bucket at the end.
  std::map<DMono, SpatialCoeff> acc;
  for (const auto& [beta, cg] : g.terms()) {
    DerivTable table;
    table.cache.emplace(dmono(0, 0, 0), cg);
    for (const auto& [alpha, cf] : f.terms()) {
      // Leibniz: d^alpha (cg ...) = sum_{gamma<=alpha} C(alpha,gamma)
      //          d^gamma(cg) d^{alpha-gamma}
      int a0 = dmono_exp(alpha, 0), a1 = dmono_exp(alpha, 1),
          a2 = dmono_exp(alpha, 2);
      for (int g0 = 0; g0 <= a0; ++g0)
        for (int g1 = 0; g1 <= a1; ++g1)
          for (int g2 = 0; g2 <= a2; ++g2) {
            const SpatialCoeff& dg = table.get(dmono(g0, g1, g2));
            if (dg.is_zero()) continue;
            Rat coef = binom(a0, g0) * binom(a1, g1) * binom(a2, g2);
            DMono rest = dmono(a0 - g0, a1 - g1, a2 - g2) + beta;
            SpatialCoeff term = cf * dg;
            if (coef != 1) term = term.scaled(ParamRat(coef));
            acc[rest].add_assign_raw(term);
          }
    }
  }
  OperatorExpr result;
  for (auto& [d, c] : acc) {
    c.reduce_now();
    result.add_term(d, c);
  }
  return result;
}

OperatorExpr commutator(const OperatorExpr& f, const OperatorExpr& g) {
  return compose(f, g) - compose(g, f);
}

OperatorExpr anticommutator(const OperatorExpr& f, const OperatorExpr& g) {
  return compose(f, g) + compose(g, f);
}

OperatorExpr pow(const OperatorExpr& f, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  OperatorExpr r = OperatorExpr::identity();
  for (int i = 0; i < n; ++i) r = compose(r, f);
  return r;
}

SpatialCoeff apply(const OperatorExpr& f, const SpatialCoeff& t) {
  DerivTable table;
  table.cache.emplace(dmono(0, 0, 0), t);
  SpatialCoeff out;
  for (const auto& [alpha, cf] : f.terms()) {
    const SpatialCoeff& dt = table.get(alpha);
    if (dt.is_zero()) continue;
    out += cf * dt;
  }
  return out;
}

}  // namespace qalg
