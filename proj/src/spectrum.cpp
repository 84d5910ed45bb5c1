#include "qalg/spectrum.hpp"

#include <sstream>

namespace qalg {

namespace {

ParamRat S(Sym s, int k = 1) { return ParamRat::symbol(s, k); }

}  // namespace

ParamRat a2_eigenvalue(int m) {
  ParamRat h2 = S(Sym::Hbar, 2);
  ParamRat top = ParamRat(2 * m + 1) + S(Sym::Mu1) + S(Sym::Mu2);
  return top * top * h2 * ParamRat(Rat(1, 2)) -
         (S(Sym::Mu1, 2) + S(Sym::Mu2, 2)) * h2 * ParamRat(Rat(1, 2)) +
         h2 * ParamRat(Rat(1, 4));
}

ParamRat a1_eigenvalue(int p) {
  ParamRat h2 = S(Sym::Hbar, 2);
  ParamRat J = ParamRat(2 * p) + S(Sym::Mu1) + S(Sym::Mu2) + S(Sym::Mu3) +
               ParamRat(Rat(3, 2));
  ParamRat musq = S(Sym::Mu1, 2) + S(Sym::Mu2, 2) + S(Sym::Mu3, 2);
  return (J * J + J - musq + ParamRat(Rat(3, 4))) * h2 * ParamRat(Rat(1, 2));
}

ParamRat energy_level(int n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  ParamRat root = ParamRat(n) + ParamRat(Rat(5, 2)) + S(Sym::Mu1) +
                  S(Sym::Mu2) + S(Sym::Mu3);
  return -(S(Sym::Hbar, 2) * S(Sym::Mu, 2)) / (root * root * ParamRat(2));
}

SpectrumTable spectrum_table(int max_n, const ModelParams& p) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  for (Sym s : {Sym::Hbar, Sym::Mu, Sym::Mu1, Sym::Mu2, Sym::Mu3})
    if (!p.is_bound(s))
      throw std::invalid_argument(std::string("spectrum table needs '") +
                                  kSymNames[static_cast<int>(s)] + "' bound");
  GaussRat mu = p.values.at(Sym::Mu);
  GaussRat hbar = p.values.at(Sym::Hbar);
  if (!mu.is_real() || !(mu.re > 0))
    throw std::invalid_argument("no bound states unless mu > 0");
  if (hbar.is_zero() || !hbar.is_real())
    throw std::invalid_argument("hbar must be real and nonzero");

  SpectrumTable t;
  t.params = p;
  for (int n = 0; n <= max_n; ++n) {
    SpectrumRow row;
    row.n = n;
    row.branch = n % 2 == 0 ? "even" : "odd";
    row.q = n / 2;
    row.p = row.q;
    row.m = 0;
    row.a2 = a2_eigenvalue(row.m).evaluate(p.values).re;
    row.a1 = a1_eigenvalue(row.p).evaluate(p.values).re;
    row.E = energy_level(n).evaluate(p.values).re;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string spectrum_csv(const SpectrumTable& t) {
  std::ostringstream os;
  os << "n,branch,q,a2,a1,E,a2_decimal,a1_decimal,E_decimal\n";
  for (const auto& r : t.rows) {
    os << r.n << ',' << r.branch << ',' << r.q << ',' << r.a2 << ',' << r.a1
       << ',' << r.E << ',' << decimal_str(r.a2) << ',' << decimal_str(r.a1)
       << ',' << decimal_str(r.E) << '\n';
  }
  return os.str();
}

Json spectrum_json(const SpectrumTable& t) {
  Json arr = Json::array();
  for (const auto& r : t.rows) {
    Json e;
    e["n"] = r.n;
    e["branch"] = r.branch;
    e["q"] = r.q;
    e["p"] = r.p;
    e["m"] = r.m;
    e["a2"] = r.a2.str();
    e["a1"] = r.a1.str();
    e["E"] = r.E.str();
    e["a2_decimal"] = decimal_str(r.a2);
    e["a1_decimal"] = decimal_str(r.a1);
    e["E_decimal"] = decimal_str(r.E);
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace qalg
