#include "qalg/paramrat.hpp"

#include <stdexcept>

namespace qalg {

ParamRat::ParamRat(ParamPoly n, ParamPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("ParamRat: zero denominator");
  normalize();
}

void ParamRat::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(1);
    return;
  }
  if (!den_.is_one()) {
    ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      ParamPoly qn, qd;
      num_.try_divide(g, qn);
      den_.try_divide(g, qd);
      num_ = std::move(qn);
      den_ = std::move(qd);
    }
    GaussRat lc = den_.leading_coeff();
    if (lc != GaussRat::one()) {
      GaussRat inv = lc.inv();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
}

ParamRat ParamRat::operator-() const {
  ParamRat r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamRat operator+(const ParamRat& a, const ParamRat& b) {
  if (a.den_ == b.den_) return ParamRat(a.num_ + b.num_, a.den_);
  return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRat operator-(const ParamRat& a, const ParamRat& b) {
  if (a.den_ == b.den_) return ParamRat(a.num_ - b.num_, a.den_);
  return ParamRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamRat operator*(const ParamRat& a, const ParamRat& b) {
  return ParamRat(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRat operator/(const ParamRat& a, const ParamRat& b) {
  if (b.is_zero()) throw std::domain_error("ParamRat: division by zero");
  return ParamRat(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRat ParamRat::inv() const {
  if (is_zero()) throw std::domain_error("ParamRat: inverse of zero");
  return ParamRat(den_, num_);
}

ParamRat ParamRat::substitute(const std::map<Sym, GaussRat>& values,
                              const std::map<Sym, Sym>& renames) const {
  ParamPoly d = den_.substitute(values, renames);
  if (d.is_zero())
    throw std::domain_error("ParamRat: denominator vanishes under substitution");
  return ParamRat(num_.substitute(values, renames), std::move(d));
}

ParamRat ParamRat::substitute_poly(Sym s, const ParamPoly& value) const {
  ParamPoly d = den_.substitute_poly(s, value);
  if (d.is_zero())
    throw std::domain_error("ParamRat: denominator vanishes under substitution");
  return ParamRat(num_.substitute_poly(s, value), std::move(d));
}

GaussRat ParamRat::evaluate(const std::map<Sym, GaussRat>& values) const {
  GaussRat d = den_.evaluate(values);
  if (d.is_zero()) throw std::domain_error("ParamRat: pole at evaluation point");
  return num_.evaluate(values) / d;
}

std::string ParamRat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qalg
