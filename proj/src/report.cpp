#include "qalg/report.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qalg {

Json catalog_report_json(const CatalogReport& rep) {
  Json arr = Json::array();
  for (const auto& r : rep.results) {
    Json e;
    e["label"] = r.label;
    e["status"] = r.ok() ? "pass" : "fail";
    e["residual_terms"] = r.residual_terms;
    if (!r.residual_summary.empty()) e["residual"] = r.residual_summary;
    if (!r.duplicate_of.empty()) e["duplicate_of"] = r.duplicate_of;
    if (r.refit_attempted) {
      e["fit_status"] = fit_status_str(r.fit.status);
      e["fit_verified"] = r.fit_verified;
      if (r.fit.status != FitOutcome::Status::NoSolution) {
        Json consts;
        for (const auto& [label, c] : r.fit.constants)
          if (!c.is_zero()) consts[label] = c.str();
        e["fitted_constants"] = consts;
      }
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string catalog_report_csv(const CatalogReport& rep) {
  std::ostringstream os;
  os << "label,status,residual_terms,duplicate_of,fit_status,fit_verified\n";
  for (const auto& r : rep.results) {
    os << csv_escape(r.label) << ',' << (r.ok() ? "pass" : "fail") << ','
       << r.residual_terms << ',' << csv_escape(r.duplicate_of) << ',';
    if (r.refit_attempted)
      os << fit_status_str(r.fit.status) << ','
         << (r.fit_verified ? "true" : "false");
    else
      os << ',';
    os << '\n';
  }
  return os.str();
}

std::string decimal_str(const Rat& r) {
  boost::multiprecision::mpf_float_100 v(r);
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string json_str(const Json& j) { return j.dump(2) + "\n"; }

void write_text_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    out << content;
    if (!out.flush())
      throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move report into place at '" + path + "'");
  }
}

}  // namespace qalg
