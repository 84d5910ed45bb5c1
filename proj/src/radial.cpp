#include "qalg/radial.hpp"

#include <cmath>
#include <vector>

namespace qalg {

namespace {

// number of eigenvalues of the symmetric tridiagonal matrix (diag d, constant
// off-diagonal e) strictly below x, via the Sturm sequence
int count_below(const std::vector<double>& d, double e, double x) {
  int cnt = 0;
  double q = d[0] - x;
  if (q < 0) ++cnt;
  double e2 = e * e;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = d[i] - x - e2 / q;
    if (q < 0) ++cnt;
  }
  return cnt;
}

}  // namespace

double radial_eigenvalue_on_grid(const RadialProblem& rp, int k, int n,
                                 double r_max) {
  if (k < 0 || n < k + 1 || n > 20000)
    throw std::invalid_argument("radial grid must have k+1..20000 points");
  if (!(r_max > 0) || !(rp.mu > 0) || !(rp.hbar > 0) || rp.J < 0)
    throw std::invalid_argument("radial problem needs positive scales");
  double h = r_max / (n + 1);
  double h2 = rp.hbar * rp.hbar;
  double jj = rp.J * (rp.J + 1.0);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    double r = (i + 1) * h;
    d[i] = h2 / (h * h) + h2 * jj / (2.0 * r * r) - h2 * rp.mu / r;
  }
  double e = -h2 / (2.0 * h * h);

  // Gershgorin bounds
  double lo = d[0], hi = d[0];
  for (double di : d) {
    lo = std::min(lo, di);
    hi = std::max(hi, di);
  }
  lo -= 2.0 * std::abs(e);
  hi += 2.0 * std::abs(e);

  for (int it = 0; it < 200 && hi - lo > 1e-15 * (std::abs(lo) + 1.0); ++it) {
    double mid = 0.5 * (lo + hi);
    if (count_below(d, e, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double radial_eigenvalue(const RadialProblem& rp, int k) {
  double r_max = rp.r_max;
  if (r_max <= 0) {
    double scale = (k + rp.J + 1.0);
    r_max = 40.0 * scale * scale / rp.mu;
  }
  int n = rp.grid > 0 ? rp.grid : 9999;
  if (2 * n + 1 > 20000)
    throw std::invalid_argument("Richardson needs 2*grid+1 <= 20000");
  double coarse = radial_eigenvalue_on_grid(rp, k, n, r_max);
  double fine = radial_eigenvalue_on_grid(rp, k, 2 * n + 1, r_max);
  // both grids include the same physical interval; the step halves (up to
  // the off-by-one that keeps nodes nested), so the h^2 error cancels
  return (4.0 * fine - coarse) / 3.0;
}

CompareReport compare_spectra(const SpectrumTable& t, int grid) {
  CompareReport rep;
  if (t.rows.empty()) return rep;
  const auto& v = t.params.values;
  auto dbl = [&](Sym s) {
    const GaussRat& g = v.at(s);
    return static_cast<double>(g.re.convert_to<double>());
  };
  RadialProblem rp;
  rp.hbar = dbl(Sym::Hbar);
  rp.mu = dbl(Sym::Mu);
  rp.J = dbl(Sym::Mu1) + dbl(Sym::Mu2) + dbl(Sym::Mu3) + 1.5;
  rp.grid = grid;

  for (const auto& row : t.rows) {
    RadialProblem p = rp;
    double scale = row.n + p.J + 1.0;
    p.r_max = 40.0 * scale * scale / p.mu;
    CompareRow out;
    out.n = row.n;
    out.E_exact = row.E.str();
    out.E_algebraic = row.E.convert_to<double>();
    out.E_oracle = radial_eigenvalue(p, row.n);
    out.rel_diff =
        std::abs(out.E_oracle - out.E_algebraic) / std::abs(out.E_algebraic);
    out.grid_n = (p.grid > 0 ? p.grid : 9999) * 2 + 1;
    out.r_max = p.r_max;
    rep.max_rel_diff = std::max(rep.max_rel_diff, out.rel_diff);
    rep.rows.push_back(std::move(out));
  }
  return rep;
}

Json compare_json(const CompareReport& rep) {
  Json arr = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["n"] = r.n;
    e["E_exact"] = r.E_exact;
    e["E_algebraic"] = r.E_algebraic;
    e["E_oracle"] = r.E_oracle;
    e["rel_diff"] = r.rel_diff;
    e["grid"] = Json{{"N", r.grid_n}, {"r_max", r.r_max}};
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace qalg
