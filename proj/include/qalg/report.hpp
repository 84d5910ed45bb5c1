#pragma once

// Machine-readable report emission: JSON (UTF-8, keys sorted) and CSV, plus
// atomic file writing and decimal formatting shared by the report producers.

#include <nlohmann/json.hpp>

#include "qalg/engine.hpp"

namespace qalg {

// nlohmann's default json keeps object keys sorted, which is what we want
// for byte-identical reports
using Json = nlohmann::json;

Json catalog_report_json(const CatalogReport& rep);
std::string catalog_report_csv(const CatalogReport& rep);

// exact rational rendered as a decimal with 12 significant digits
std::string decimal_str(const Rat& r);

// serialize with a trailing newline, 2-space indent
std::string json_str(const Json& j);

// write-to-temp-then-rename; throws std::runtime_error on I/O failure
void write_text_atomic(const std::string& path, const std::string& content);

std::string csv_escape(const std::string& field);

}  // namespace qalg
