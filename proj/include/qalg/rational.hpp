#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qalg {

using Rat = boost::multiprecision::mpq_rational;

/// Gaussian rational a + b*i with exact arbitrary-precision components.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(long v) : re(v) {}
  GaussRat(const Rat& r) : re(r) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(1); }
  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat nre = re * o.re - im * o.im;
    Rat nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

  GaussRat inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return GaussRat(re / n, -im / n);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    return a * b.inv();
  }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }

  std::string str() const {
    std::ostringstream os;
    if (im == 0) {
      os << re;
    } else if (re == 0) {
      if (im == 1)
        os << "i";
      else if (im == -1)
        os << "-i";
      else
        os << "(" << im << ")*i";
    } else {
      os << "(" << re << (im > 0 ? "+" : "") << im << "*i)";
    }
    return os.str();
  }
};

/// Parses "p", "-p", or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(s);
    Rat num(s.substr(0, slash));
    Rat den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
}

}  // namespace qalg
