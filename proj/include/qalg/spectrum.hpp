#pragma once

// Algebraic bound-state spectrum: eigenvalue ladders of the two subalgebra
// pairs and the merged energy levels, with CSV/JSON table emission.

#include "qalg/quadrep.hpp"
#include "qalg/report.hpp"

namespace qalg {

// A2 eigenvalue at ladder step m of the (A2, B2) pair:
//   a2(m) = (hbar^2/2)(2m + mu1 + mu2 + 1)^2
//           - (hbar^2/2)(mu1^2 + mu2^2) + hbar^2/4
ParamRat a2_eigenvalue(int m);

// A1 eigenvalue on the (p+1)-step ladder of the (A1, B1) pair:
//   2 a1(p) = hbar^2 (J(J+1) - mu1^2 - mu2^2 - mu3^2 + 3/4),
//   J = 2p + mu1 + mu2 + mu3 + 3/2
ParamRat a1_eigenvalue(int p);

// Bound-state energy; the even (n = 2p + 2m) and odd (n = 2p + 2m + 1)
// representation branches merge into
//   E(n) = -hbar^2 mu^2 / (2 (n + 5/2 + mu1 + mu2 + mu3)^2)
ParamRat energy_level(int n);

struct SpectrumRow {
  int n = 0;
  std::string branch;  // "even" or "odd"
  int q = 0;           // branch index: n = 2q (even) or 2q + 1 (odd)
  int p = 0, m = 0;    // witness representation (p + m = q; m = 0 chosen)
  Rat a2, a1, E;
};

struct SpectrumTable {
  ModelParams params;
  std::vector<SpectrumRow> rows;
};

// Rows n = 0..max_n.  Requires hbar, mu, mu1..mu3 all bound, hbar != 0 and
// mu > 0 (no bound states otherwise); throws std::invalid_argument.
SpectrumTable spectrum_table(int max_n, const ModelParams& p);

// columns: n, branch, q, a2, a1, E (exact fractions), then the same three
// values as 12-significant-digit decimals
std::string spectrum_csv(const SpectrumTable& t);
Json spectrum_json(const SpectrumTable& t);

}  // namespace qalg
