#ifndef PARAHIGGS_TOOLS_REPORT_IO_HPP
#define PARAHIGGS_TOOLS_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "parahiggs/assembly.hpp"

namespace parahiggs::io {

/// Polynomial as an ascending coefficient array (t^0 first, no trailing
/// zeros). Coefficients beyond int64 fall back to decimal strings.
nlohmann::json poly_to_json(const LaurentPoly& p);

nlohmann::json input_to_json(const ModuliInput& input);
nlohmann::json report_to_json(const ModuliReport& report);

std::string csv_header();
std::string report_to_csv_row(const ModuliReport& report);
/// Row for an input that failed validation.
std::string error_to_csv_row(const ModuliInput& input, const std::string& error);

std::string report_to_text(const ModuliReport& report);

}  // namespace parahiggs::io

#endif
