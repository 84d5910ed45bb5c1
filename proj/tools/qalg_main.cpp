// command-line front end: exact verification, fitting, and spectrum tools
//
// exit codes: 0 pass, 1 check failure, 2 usage/parse error, 3 I/O error

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qalg/radial.hpp"

using namespace qalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  try {
    write_text_atomic(path, content);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

// shared --hbar/--mu/--mu1.. options; values are exact rationals
struct ParamOpts {
  std::string hbar, mu, mu1, mu2, mu3;

  void attach(CLI::App* cmd) {
    cmd->add_option("--hbar", hbar, "Planck constant (rational p/q)");
    cmd->add_option("--mu", mu, "Coulomb strength (rational p/q)");
    cmd->add_option("--mu1", mu1, "first singular-term parameter (rational)");
    cmd->add_option("--mu2", mu2, "second singular-term parameter (rational)");
    cmd->add_option("--mu3", mu3, "third singular-term parameter (rational)");
  }

  ModelParams to_params() const {
    ModelParams p;
    auto set = [&](Sym s, const std::string& v) {
      if (!v.empty()) p.values[s] = GaussRat(parse_rat(v));
    };
    set(Sym::Hbar, hbar);
    set(Sym::Mu, mu);
    set(Sym::Mu1, mu1);
    set(Sym::Mu2, mu2);
    set(Sym::Mu3, mu3);
    return p;
  }
};

Json casimir_json(const CasimirValue& k, const ParamRat& printed) {
  Json j;
  j["central"] = k.central_ok;
  j["polynomial_known"] = k.polynomial_known;
  if (k.polynomial_known) {
    j["polynomial"] = k.as_polynomial.str();
    j["matches_published"] = (k.as_polynomial == printed);
    if (k.as_polynomial != printed)
      j["residual_vs_published"] = (k.as_polynomial - printed).str();
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact symbolic toolkit for the nondegenerate Kepler-Coulomb "
               "integrals of motion and their quadratic algebra"};
  app.require_subcommand(1);

  // ---------------------------------------------------------------- build
  auto* build = app.add_subcommand(
      "build", "print an integral of motion in normal-ordered form");
  std::string build_name = "H";
  ParamOpts build_params;
  build->add_option("--name", build_name,
                    "operator name (H A1 A2 B2 B1 F J1 J2 J3 TotalJ Px Py Pz)");
  build_params.attach(build);
  std::string build_out;
  build->add_option("-o,--output", build_out, "output path (default stdout)");

  // --------------------------------------------------------------- verify
  auto* verify = app.add_subcommand(
      "verify", "verify every relation in a catalog, refitting failures");
  std::string verify_catalog_path;
  verify->add_option("--catalog", verify_catalog_path, "relation file")
      ->required();
  ParamOpts verify_params;
  verify_params.attach(verify);
  bool verify_symbolic = false;
  verify->add_flag("--symbolic", verify_symbolic,
                   "keep all parameters symbolic (default when no values given)");
  bool no_refit = false;
  verify->add_flag("--no-refit", no_refit, "report failures without refitting");
  int verify_threads = 0;
  verify->add_option("--threads", verify_threads,
                     "worker threads (0 = hardware; QALG_THREADS caps)");
  std::string verify_json, verify_csv;
  verify->add_option("--json", verify_json, "write the JSON report here");
  verify->add_option("--csv", verify_csv, "write the CSV report here");

  // ------------------------------------------------------------------ fit
  auto* fit = app.add_subcommand(
      "fit", "fit one relation's left side onto its monomial basis");
  std::string fit_catalog, fit_label;
  fit->add_option("--catalog", fit_catalog, "relation file")->required();
  fit->add_option("--label", fit_label, "relation label")->required();
  ParamOpts fit_params;
  fit_params.attach(fit);
  std::string fit_out;
  fit->add_option("--json", fit_out, "write the JSON result here");

  // -------------------------------------------------------------- casimir
  auto* casimir = app.add_subcommand(
      "casimir", "evaluate the Casimir formula for a subalgebra pair");
  std::string casimir_pair = "a2b2";
  casimir->add_option("--pair", casimir_pair, "a2b2 or a1b1")
      ->check(CLI::IsMember({"a2b2", "a1b1"}));
  std::string casimir_variant = "corrected";
  casimir->add_option("--variant", casimir_variant,
                      "B-term sign: corrected or printed")
      ->check(CLI::IsMember({"corrected", "printed"}));
  std::string casimir_out;
  casimir->add_option("--json", casimir_out, "write the JSON result here");

  // ---------------------------------------------------- structure-function
  auto* structure = app.add_subcommand(
      "structure-function",
      "structure polynomial of a pair, checked against its factorization");
  std::string structure_pair = "a2b2";
  structure->add_option("--pair", structure_pair, "a2b2 or a1b1")
      ->check(CLI::IsMember({"a2b2", "a1b1"}));
  std::string structure_out;
  structure->add_option("--json", structure_out, "write the JSON result here");

  // ------------------------------------------------------------- spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "algebraic bound-state table at rational parameters");
  ParamOpts spectrum_params;
  spectrum_params.attach(spectrum);
  int max_n = 2;
  spectrum->add_option("--max-n", max_n, "highest level index");
  std::string spectrum_json_path, spectrum_csv_path;
  spectrum->add_option("--json", spectrum_json_path, "write the JSON table here");
  spectrum->add_option("--csv", spectrum_csv_path, "write the CSV table here");

  // --------------------------------------------------------------- oracle
  auto* oracle = app.add_subcommand(
      "oracle", "finite-difference radial eigenvalues (numerical)");
  double oracle_J = 0, oracle_mu = 1, oracle_hbar = 1, oracle_rmax = 0;
  int oracle_levels = 1, oracle_grid = 0;
  oracle->add_option("--J", oracle_J, "effective angular momentum");
  oracle->add_option("--mu", oracle_mu, "Coulomb strength");
  oracle->add_option("--hbar", oracle_hbar, "Planck constant");
  oracle->add_option("--levels", oracle_levels, "number of levels");
  oracle->add_option("--grid", oracle_grid, "interior grid points (0 = auto)");
  oracle->add_option("--r-max", oracle_rmax, "box radius (0 = auto)");
  std::string oracle_out;
  oracle->add_option("--json", oracle_out, "write the JSON result here");

  // -------------------------------------------------------------- compare
  auto* compare = app.add_subcommand(
      "compare", "algebraic spectrum vs the radial oracle");
  ParamOpts compare_params;
  compare_params.attach(compare);
  int compare_max_n = 2, compare_grid = 0;
  double compare_tol = 1e-3;
  compare->add_option("--max-n", compare_max_n, "highest level index");
  compare->add_option("--grid", compare_grid, "interior grid points (0 = auto)");
  compare->add_option("--tol", compare_tol, "relative tolerance");
  std::string compare_out;
  compare->add_option("--json", compare_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (build->parsed()) {
    auto name = integral_from_string(build_name);
    if (!name) {
      std::cerr << "unknown operator name '" << build_name << "'\n";
      return kExitUsage;
    }
    OperatorExpr op = build_operator(*name, build_params.to_params());
    emit(op.str() + "\n", build_out);
    return kExitPass;
  }

  if (verify->parsed()) {
    Catalog cat = parse_catalog(slurp(verify_catalog_path));
    ModelParams p =
        verify_symbolic ? ModelParams::symbolic() : verify_params.to_params();
    CatalogReport rep = verify_catalog(cat, p, !no_refit, verify_threads);
    Json j = catalog_report_json(rep);
    if (!verify_json.empty()) emit(json_str(j), verify_json);
    if (!verify_csv.empty()) emit(catalog_report_csv(rep), verify_csv);
    if (verify_json.empty() && verify_csv.empty()) emit(json_str(j), "");
    return rep.all_ok() ? kExitPass : kExitCheckFailed;
  }

  if (fit->parsed()) {
    Catalog cat = parse_catalog(slurp(fit_catalog));
    const RelationSchema* rel = nullptr;
    for (const auto& r : cat.relations)
      if (r.label == fit_label) rel = &r;
    if (!rel) {
      std::cerr << "no relation labeled '" << fit_label << "' in "
                << fit_catalog << "\n";
      return kExitUsage;
    }
    ModelParams p = fit_params.to_params();
    Binding bind = standard_binding(cat.generators, p);
    OperatorExpr target = evaluate_ast(*rel->lhs, bind, p);
    std::vector<BasisElement> basis = refit_basis(*rel, bind, p);
    FitOutcome out = fit_structure_constants(target, basis);
    Json j;
    j["label"] = rel->label;
    j["status"] = fit_status_str(out.status);
    j["nullity"] = out.nullity;
    Json consts;
    for (const auto& [label, c] : out.constants)
      if (!c.is_zero()) consts[label] = c.str();
    j["constants"] = consts;
    emit(json_str(j), fit_out);
    return out.status == FitOutcome::Status::NoSolution ? kExitCheckFailed
                                                        : kExitPass;
  }

  if (casimir->parsed()) {
    ModelParams p = ModelParams::symbolic();
    CasimirVariant variant = casimir_variant == "printed"
                                 ? CasimirVariant::AsPrinted
                                 : CasimirVariant::BTermCorrected;
    CasimirValue k;
    ParamRat published;
    if (casimir_pair == "a2b2") {
      k = casimir_from_formula(
          coeffs_a2b2(), build_operator(IntegralName::A2, p),
          build_operator(IntegralName::B2, p),
          {{Sym::A1bar, build_operator(IntegralName::A1, p)}}, variant);
      published = printed_k2();
    } else {
      k = casimir_from_formula(
          coeffs_a1b1(), build_operator(IntegralName::A1, p),
          build_operator(IntegralName::B1, p),
          {{Sym::En, build_operator(IntegralName::H, p)},
           {Sym::A2bar, build_operator(IntegralName::A2, p)}},
          variant);
      published = printed_k1();
    }
    Json j = casimir_json(k, published);
    j["pair"] = casimir_pair;
    j["variant"] = casimir_variant;
    emit(json_str(j), casimir_out);
    bool ok = k.central_ok && k.polynomial_known && k.as_polynomial == published;
    return ok ? kExitPass : kExitCheckFailed;
  }

  if (structure->parsed()) {
    bool is_a2b2 = structure_pair == "a2b2";
    ParamRat phi = is_a2b2 ? structure_poly(coeffs_a2b2(), printed_k2())
                           : structure_poly(coeffs_a1b1(), printed_k1());
    FactorCatalog cat = is_a2b2 ? factored_phi_a2b2() : factored_phi_a1b1();
    bool ok = (phi == factored_product(cat));
    Json j;
    j["pair"] = structure_pair;
    j["matches_factorization"] = ok;
    j["prefactor"] = cat.prefactor.str();
    Json fs = Json::array();
    for (const auto& f : cat.factors) fs.push_back(f.str());
    j["factors"] = fs;
    emit(json_str(j), structure_out);
    return ok ? kExitPass : kExitCheckFailed;
  }

  if (spectrum->parsed()) {
    SpectrumTable t = spectrum_table(max_n, spectrum_params.to_params());
    if (!spectrum_json_path.empty())
      emit(json_str(spectrum_json(t)), spectrum_json_path);
    if (!spectrum_csv_path.empty())
      emit(spectrum_csv(t), spectrum_csv_path);
    if (spectrum_json_path.empty() && spectrum_csv_path.empty())
      emit(spectrum_csv(t), "");
    return kExitPass;
  }

  if (oracle->parsed()) {
    RadialProblem rp;
    rp.J = oracle_J;
    rp.mu = oracle_mu;
    rp.hbar = oracle_hbar;
    rp.grid = oracle_grid;
    rp.r_max = oracle_rmax;
    Json arr = Json::array();
    for (int k = 0; k < oracle_levels; ++k) {
      Json e;
      e["k"] = k;
      e["E"] = radial_eigenvalue(rp, k);
      arr.push_back(std::move(e));
    }
    emit(json_str(arr), oracle_out);
    return kExitPass;
  }

  if (compare->parsed()) {
    SpectrumTable t = spectrum_table(compare_max_n, compare_params.to_params());
    CompareReport rep = compare_spectra(t, compare_grid);
    Json j;
    j["rows"] = compare_json(rep);
    j["max_rel_diff"] = rep.max_rel_diff;
    j["tolerance"] = compare_tol;
    j["pass"] = rep.pass(compare_tol);
    emit(json_str(j), compare_out);
    return rep.pass(compare_tol) ? kExitPass : kExitCheckFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
