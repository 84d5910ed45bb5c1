#pragma once

// Normal-ordered differential operators in x,y,z.  Coefficients live in the
// ring generated by x, y, z and r with r^2 = x^2+y^2+z^2, with denominators
// restricted to the monoid generated by {x, y, z, s} where s = x^2+y^2+z^2.
// That monoid is closed under the derivatives and products we need, and its
// elements factor uniquely, so reduced forms are canonical and zero-testing
// is a term comparison.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "qalg/paramrat.hpp"

namespace qalg {

// Packed (x,y,z) exponent triple, 10 bits each.  x sits in the high bits so
// that map order is x-major: division by s = x^2+y^2+z^2 can then pivot on
// the last term of the map.
using SMono = std::uint32_t;

inline constexpr int smono_shift(int axis) { return 20 - 10 * axis; }
inline SMono smono(int ex, int ey, int ez) {
  return (static_cast<SMono>(ex) << 20) | (static_cast<SMono>(ey) << 10) |
         static_cast<SMono>(ez);
}
inline int smono_exp(SMono m, int axis) {
  return (m >> smono_shift(axis)) & 0x3ff;
}
std::string smono_str(SMono m);

// Polynomial in x,y,z with ParamRat coefficients.
class SpatialPoly {
 public:
  using TermMap = std::map<SMono, ParamRat>;

  SpatialPoly() = default;
  static SpatialPoly constant(ParamRat c);
  static SpatialPoly monomial(SMono m, ParamRat c = ParamRat(1));
  static SpatialPoly coordinate(int axis, int power = 1);
  static SpatialPoly s();  // x^2+y^2+z^2

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(SMono m, const ParamRat& c);

  SpatialPoly operator-() const;
  SpatialPoly& operator+=(const SpatialPoly& o);
  SpatialPoly& operator-=(const SpatialPoly& o);
  friend SpatialPoly operator+(SpatialPoly a, const SpatialPoly& b) { return a += b; }
  friend SpatialPoly operator-(SpatialPoly a, const SpatialPoly& b) { return a -= b; }
  friend SpatialPoly operator*(const SpatialPoly& a, const SpatialPoly& b);
  SpatialPoly scaled(const ParamRat& c) const;

  friend bool operator==(const SpatialPoly& a, const SpatialPoly& b) {
    return a.terms_ == b.terms_;
  }

  SpatialPoly derivative(int axis) const;
  // minimal exponent of the given coordinate across all terms (0 if zero poly)
  int min_exp(int axis) const;
  SpatialPoly shifted(int axis, int delta) const;  // multiply by coord^delta (delta may be <0 if divisible)
  // exact division by s = x^2+y^2+z^2; false if not divisible
  bool try_divide_s(SpatialPoly& quotient) const;

  ParamRat eval(const std::array<GaussRat, 3>& pt,
                const std::map<Sym, GaussRat>& params) const;
  SpatialPoly substitute(const std::map<Sym, GaussRat>& values) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// (a + b*r) / (x^d0 * y^d1 * z^d2 * s^d3)
class SpatialCoeff {
 public:
  SpatialCoeff() : den_{0, 0, 0, 0} {}
  SpatialCoeff(SpatialPoly a, SpatialPoly b, std::array<int, 4> den)
      : a_(std::move(a)), b_(std::move(b)), den_(den) {
    reduce();
  }
  static SpatialCoeff polynomial(SpatialPoly a) {
    return SpatialCoeff(std::move(a), SpatialPoly(), {0, 0, 0, 0});
  }
  static SpatialCoeff constant(ParamRat c) {
    return polynomial(SpatialPoly::constant(std::move(c)));
  }
  // c * x^ex y^ey z^ez * r^er / (x^dx y^dy z^dz s^ds), er in {0,1}
  static SpatialCoeff make(ParamRat c, SMono num, int r_power,
                           std::array<int, 4> den);

  const SpatialPoly& a() const { return a_; }
  const SpatialPoly& b() const { return b_; }
  const std::array<int, 4>& den() const { return den_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  SpatialCoeff operator-() const;
  friend SpatialCoeff operator+(const SpatialCoeff& p, const SpatialCoeff& q);
  friend SpatialCoeff operator-(const SpatialCoeff& p, const SpatialCoeff& q);
  friend SpatialCoeff operator*(const SpatialCoeff& p, const SpatialCoeff& q);
  SpatialCoeff& operator+=(const SpatialCoeff& o) { return *this = *this + o; }
  SpatialCoeff scaled(const ParamRat& c) const;

  // Accumulation helpers: merge without the (expensive) canonical reduction,
  // then reduce once at the end.  A non-reduced value is still a valid
  // representative; reduce_now() restores the canonical form.
  void add_assign_raw(const SpatialCoeff& o);
  void reduce_now() { reduce(); }

  friend bool operator==(const SpatialCoeff& p, const SpatialCoeff& q) {
    return p.den_ == q.den_ && p.a_ == q.a_ && p.b_ == q.b_;
  }

  SpatialCoeff derivative(int axis) const;

  SpatialCoeff substitute(const std::map<Sym, GaussRat>& values) const;

  std::string str() const;

 private:
  void reduce();
  SpatialPoly a_, b_;
  std::array<int, 4> den_;
};

// Derivative multi-index, 10 bits per axis.
using DMono = std::uint32_t;
inline DMono dmono(int ax, int ay, int az) {
  return static_cast<DMono>(ax) | (static_cast<DMono>(ay) << 10) |
         (static_cast<DMono>(az) << 20);
}
inline int dmono_exp(DMono m, int axis) { return (m >> (10 * axis)) & 0x3ff; }
inline int dmono_order(DMono m) {
  return dmono_exp(m, 0) + dmono_exp(m, 1) + dmono_exp(m, 2);
}
std::string dmono_str(DMono m);

class OperatorExpr {
 public:
  using TermMap = std::map<DMono, SpatialCoeff>;

  OperatorExpr() = default;

  static OperatorExpr zero() { return OperatorExpr(); }
  static OperatorExpr identity();
  static OperatorExpr multiplication(SpatialCoeff c);
  static OperatorExpr scalar(ParamRat c);
  static OperatorExpr partial(int axis, int order = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;  // max derivative order; -1 if zero

  void add_term(DMono d, const SpatialCoeff& c);

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) {
    return a += b;
  }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) {
    return a -= b;
  }
  OperatorExpr scaled(const ParamRat& c) const;

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const OperatorExpr& a, const OperatorExpr& b) {
    return !(a == b);
  }

  // Full substitution of parameter symbols in every coefficient.
  OperatorExpr substitute(const std::map<Sym, GaussRat>& values) const;

  std::string str() const;

 private:
  TermMap terms_;
};

OperatorExpr compose(const OperatorExpr& f, const OperatorExpr& g);
OperatorExpr commutator(const OperatorExpr& f, const OperatorExpr& g);
OperatorExpr anticommutator(const OperatorExpr& f, const OperatorExpr& g);
OperatorExpr pow(const OperatorExpr& f, int n);

// Image of a test "function" (any SpatialCoeff; monomials x^i y^j z^k r^s in
// practice) under the operator.
SpatialCoeff apply(const OperatorExpr& f, const SpatialCoeff& t);

}  // namespace qalg
