#pragma once

// Independent numerical check of the algebraic spectrum: finite-difference
// discretization of the reduced radial equation
//   -(hbar^2/2) u'' + [hbar^2 J(J+1)/(2 r^2) - hbar^2 mu / r] u = E u
// on [0, r_max] with Dirichlet ends, eigenvalues by Sturm bisection on the
// symmetric tridiagonal matrix, Richardson-extrapolated in the grid step.

#include "qalg/spectrum.hpp"

namespace qalg {

struct RadialProblem {
  double hbar = 1.0;
  double mu = 1.0;   // Coulomb strength; potential is -hbar^2 mu / r
  double J = 0.0;    // effective angular momentum, not necessarily integer
  double r_max = 0;  // 0 = auto: 40 (k + J + 1)^2 / mu
  int grid = 0;      // interior points; 0 = auto (10000); Richardson doubles it
};

// k-th (0-based) lowest eigenvalue on a single grid of n interior points
double radial_eigenvalue_on_grid(const RadialProblem& rp, int k, int n,
                                 double r_max);

// Richardson-extrapolated k-th eigenvalue: (4 E_{2N} - E_N) / 3
double radial_eigenvalue(const RadialProblem& rp, int k);

struct CompareRow {
  int n = 0;
  std::string E_exact;  // exact fraction
  double E_algebraic = 0, E_oracle = 0, rel_diff = 0;
  int grid_n = 0;
  double r_max = 0;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  double max_rel_diff = 0;
  bool pass(double tol = 1e-3) const { return max_rel_diff <= tol; }
};

// Checks every table row against the radial problem in the lowest ladder
// sector (J = mu1 + mu2 + mu3 + 3/2, radial quantum number n): the row's
// energy must be the n-th radial eigenvalue.
CompareReport compare_spectra(const SpectrumTable& t, int grid = 0);

Json compare_json(const CompareReport& rep);

}  // namespace qalg
