// python bindings for the main operations: spectrum, catalog verification,
// the radial oracle, and the relation DSL

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qalg/radial.hpp"

namespace py = pybind11;
using namespace qalg;

namespace {

ModelParams params_from(const std::map<std::string, std::string>& vals) {
  static const std::map<std::string, Sym> names = {{"hbar", Sym::Hbar},
                                                   {"mu", Sym::Mu},
                                                   {"mu1", Sym::Mu1},
                                                   {"mu2", Sym::Mu2},
                                                   {"mu3", Sym::Mu3}};
  ModelParams p;
  for (const auto& [k, v] : vals) {
    auto it = names.find(k);
    if (it == names.end())
      throw std::invalid_argument("unknown parameter '" + k + "'");
    p.values[it->second] = GaussRat(parse_rat(v));
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_qalg, m) {
  m.doc() =
      "exact symbolic engine for the nondegenerate Kepler-Coulomb integrals "
      "of motion, their quadratic algebra, and the algebraic spectrum";

  m.def(
      "energy_exact",
      [](int n, const std::map<std::string, std::string>& params) {
        GaussRat e = energy_level(n).evaluate(params_from(params).values);
        return e.re.str();
      },
      py::arg("n"), py::arg("params"),
      "exact bound-state energy E(n) as a fraction string");

  m.def(
      "spectrum",
      [](int max_n, const std::map<std::string, std::string>& params) {
        SpectrumTable t = spectrum_table(max_n, params_from(params));
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict d;
          d["n"] = r.n;
          d["branch"] = r.branch;
          d["q"] = r.q;
          d["p"] = r.p;
          d["m"] = r.m;
          d["a2"] = r.a2.str();
          d["a1"] = r.a1.str();
          d["E"] = r.E.str();
          d["E_decimal"] = decimal_str(r.E);
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("max_n"), py::arg("params"),
      "algebraic bound-state table at exact rational parameters");

  m.def(
      "verify_catalog_text",
      [](const std::string& text,
         const std::map<std::string, std::string>& params, bool refit,
         int threads) {
        Catalog cat = parse_catalog(text);
        CatalogReport rep =
            verify_catalog(cat, params_from(params), refit, threads);
        return json_str(catalog_report_json(rep));
      },
      py::arg("text"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("refit") = true, py::arg("threads") = 0,
      "verify a relation catalog (text form); returns the JSON report");

  m.def(
      "zero_suite",
      [](const std::map<std::string, std::string>& params) {
        ZeroSuiteReport rep = verify_zero_suite(params_from(params));
        py::list out;
        for (const auto& e : rep.entries)
          out.append(py::make_tuple(e.label, e.is_zero));
        return out;
      },
      py::arg("params") = std::map<std::string, std::string>{},
      "the ten commutation relations; (label, is_zero) pairs");

  m.def(
      "radial_eigenvalue",
      [](double J, int k, double mu, double hbar, int grid, double r_max) {
        RadialProblem rp;
        rp.J = J;
        rp.mu = mu;
        rp.hbar = hbar;
        rp.grid = grid;
        rp.r_max = r_max;
        return radial_eigenvalue(rp, k);
      },
      py::arg("J"), py::arg("k") = 0, py::arg("mu") = 1.0,
      py::arg("hbar") = 1.0, py::arg("grid") = 0, py::arg("r_max") = 0.0,
      "k-th radial finite-difference eigenvalue (numerical oracle)");

  m.def(
      "compare_spectra_json",
      [](int max_n, const std::map<std::string, std::string>& params,
         int grid) {
        SpectrumTable t = spectrum_table(max_n, params_from(params));
        return json_str(compare_json(compare_spectra(t, grid)));
      },
      py::arg("max_n"), py::arg("params"), py::arg("grid") = 0,
      "algebraic spectrum vs the radial oracle; returns the JSON report");

  m.def(
      "canonical_expression",
      [](const std::string& text, const std::vector<std::string>& generators) {
        return print_ast(*parse_expression(text, generators));
      },
      py::arg("text"), py::arg("generators"),
      "parse an operator expression and print its canonical form");

  m.def(
      "build_operator_str",
      [](const std::string& name,
         const std::map<std::string, std::string>& params) {
        auto n = integral_from_string(name);
        if (!n) throw std::invalid_argument("unknown operator '" + name + "'");
        return build_operator(*n, params_from(params)).str();
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
      "normal-ordered form of a built-in integral of motion");
}
