#pragma once

// Multivariate polynomials over Gaussian rationals in the fixed parameter /
// central symbol alphabet.  Exponent vectors are packed into a single
// uint64_t (7 bits per symbol), compared in graded-lex order so that every
// polynomial has a canonical term sequence.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

// Fixed global symbol order: hbar < mu < mu1 < mu2 < mu3 < E < a2bar < a1bar.
// T (the structure-function variable t = u+x) is appended last so the order
// on the first eight is untouched.
enum class Sym : int {
  Hbar = 0,
  Mu = 1,
  Mu1 = 2,
  Mu2 = 3,
  Mu3 = 4,
  En = 5,
  A2bar = 6,
  A1bar = 7,
  T = 8,
};

inline constexpr int kNumSyms = 9;
inline constexpr int kExpBits = 7;
inline constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;

extern const std::array<const char*, kNumSyms> kSymNames;

// Packed exponent vector.
using Mono = std::uint64_t;

inline int mono_exp(Mono m, Sym s) {
  return static_cast<int>((m >> (kExpBits * static_cast<int>(s))) & kExpMask);
}
Mono mono_set_exp(Mono m, Sym s, int e);
inline Mono mono_mul(Mono a, Mono b) { return a + b; }  // no overflow checked here
int mono_total_degree(Mono m);
std::string mono_str(Mono m);

// Graded-lex: compare total degree first, then exponents from Hbar upward.
struct MonoLess {
  bool operator()(Mono a, Mono b) const;
};

class ParamPoly {
 public:
  using TermMap = std::map<Mono, GaussRat, MonoLess>;

  ParamPoly() = default;

  static ParamPoly constant(GaussRat c);
  static ParamPoly constant(long c) { return constant(GaussRat(c)); }
  static ParamPoly constant(const Rat& c) { return constant(GaussRat(c)); }
  static ParamPoly symbol(Sym s, int power = 1);
  static ParamPoly term(Mono m, GaussRat c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Constant term (coefficient of the empty monomial).
  GaussRat constant_part() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(Sym s) const;
  bool depends_on(Sym s) const;

  // Leading term under graded-lex.
  Mono leading_mono() const;
  GaussRat leading_coeff() const;

  void add_term(Mono m, const GaussRat& c);

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly scaled(const GaussRat& c) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) {
    return !(a == b);
  }

  // Substitute symbols by rational values and/or other symbols; unbound
  // symbols pass through.
  ParamPoly substitute(const std::map<Sym, GaussRat>& values,
                       const std::map<Sym, Sym>& renames = {}) const;
  // Substitute one symbol by a whole polynomial.
  ParamPoly substitute_poly(Sym s, const ParamPoly& value) const;
  // Full evaluation; throws if a symbol is left unbound.
  GaussRat evaluate(const std::map<Sym, GaussRat>& values) const;

  // Exact division; returns false if not divisible.
  bool try_divide(const ParamPoly& divisor, ParamPoly& quotient) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// Multivariate gcd over Q(i)[syms], normalized so the leading coefficient
// (graded-lex) is 1.  gcd(0,0) = 0.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace qalg
