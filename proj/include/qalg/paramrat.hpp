#pragma once

// Reduced rational functions num/den over ParamPoly.  Canonical form:
// gcd(num,den)=1 and den has leading coefficient 1 (graded-lex).

#include "qalg/parampoly.hpp"

namespace qalg {

class ParamRat {
 public:
  ParamRat() : num_(), den_(ParamPoly::constant(1)) {}
  ParamRat(long v) : num_(ParamPoly::constant(v)), den_(ParamPoly::constant(1)) {}
  ParamRat(const Rat& v)
      : num_(ParamPoly::constant(v)), den_(ParamPoly::constant(1)) {}
  ParamRat(const GaussRat& v)
      : num_(ParamPoly::constant(v)), den_(ParamPoly::constant(1)) {}
  ParamRat(ParamPoly n) : num_(std::move(n)), den_(ParamPoly::constant(1)) {}
  ParamRat(ParamPoly n, ParamPoly d);  // normalizes

  static ParamRat symbol(Sym s, int power = 1) {
    return ParamRat(ParamPoly::symbol(s, power));
  }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  ParamRat operator-() const;
  friend ParamRat operator+(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator-(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator*(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator/(const ParamRat& a, const ParamRat& b);
  ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
  ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
  ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }
  ParamRat& operator/=(const ParamRat& o) { return *this = *this / o; }
  ParamRat inv() const;

  friend bool operator==(const ParamRat& a, const ParamRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamRat& a, const ParamRat& b) {
    return !(a == b);
  }

  // Partial substitution; throws std::domain_error if the denominator
  // becomes identically zero.
  ParamRat substitute(const std::map<Sym, GaussRat>& values,
                      const std::map<Sym, Sym>& renames = {}) const;
  ParamRat substitute_poly(Sym s, const ParamPoly& value) const;
  // Full evaluation; throws std::domain_error at a pole.
  GaussRat evaluate(const std::map<Sym, GaussRat>& values) const;

  bool depends_on(Sym s) const {
    return num_.depends_on(s) || den_.depends_on(s);
  }

  std::string str() const;

 private:
  void normalize();
  ParamPoly num_, den_;
};

}  // namespace qalg
