#include "report_io.hpp"

#include <sstream>

namespace parahiggs::io {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients_ascending()) {
    if (c.fits_slong_p())
      arr.push_back(static_cast<std::int64_t>(c.get_si()));
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

json input_to_json(const ModuliInput& input) {
  json pts = json::array();
  for (const auto& p : input.points)
    pts.push_back({{"alpha1", p.alpha1.to_string()},
                   {"alpha2", p.alpha2.to_string()},
                   {"eta", p.eta.to_string()}});
  return {{"genus", input.genus}, {"a", input.a}, {"b", input.b}, {"points", pts}};
}

json report_to_json(const ModuliReport& report) {
  json notes = json::array();
  for (const auto& n : report.discrepancies)
    notes.push_back({{"kind", n.kind}, {"detail", n.detail}});

  json j{{"input", input_to_json(report.input)},
         {"delta", report.derived.delta},
         {"tau", report.derived.tau.to_string()},
         {"method", to_string(report.method)},
         {"dualized", report.dualized},
         {"poincare", poly_to_json(report.poincare)},
         {"betti", poly_to_json(report.poincare)},
         {"n111_contribution", poly_to_json(report.n111_contribution)},
         {"triples_contribution", poly_to_json(report.triples_contribution)},
         {"complex_dimension", report.complex_dimension},
         {"euler_characteristic",
          report.euler_characteristic.fits_slong_p()
              ? json(static_cast<std::int64_t>(report.euler_characteristic.get_si()))
              : json(report.euler_characteristic.get_str())},
         {"duality_palindrome", report.duality_palindrome},
         {"palindrome_about_2dim", report.palindrome_about_2dim},
         {"discrepancies", notes}};
  if (report.derived.case_label) j["case"] = to_string(*report.derived.case_label);
  return j;
}

std::string csv_header() {
  return "genus,a,b,alpha1,alpha2,eta,case,tau,delta,complex_dimension,"
         "betti,palindrome,method_agreement,error";
}

namespace {

std::string betti_cell(const LaurentPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : p.coefficients_ascending()) {
    if (!first) os << " ";
    os << c.get_str();
    first = false;
  }
  return os.str();
}

std::string input_prefix(const ModuliInput& input) {
  const auto& p = input.points.front();
  std::ostringstream os;
  os << input.genus << "," << input.a << "," << input.b << "," << p.alpha1.to_string() << ","
     << p.alpha2.to_string() << "," << p.eta.to_string();
  return os.str();
}

}  // namespace

std::string report_to_csv_row(const ModuliReport& report) {
  std::ostringstream os;
  os << input_prefix(report.input) << ","
     << (report.derived.case_label ? to_string(*report.derived.case_label) : "") << ","
     << report.derived.tau.to_string() << "," << report.derived.delta << ","
     << report.complex_dimension << "," << betti_cell(report.poincare) << ","
     << (report.duality_palindrome ? "true" : "false") << ","
     << (report.method == Method::both ? "true" : "") << ",";
  return os.str();
}

std::string error_to_csv_row(const ModuliInput& input, const std::string& error) {
  std::ostringstream os;
  os << input_prefix(input) << ",,,,,,," << error;
  return os.str();
}

std::string report_to_text(const ModuliReport& report) {
  std::ostringstream os;
  const auto& in = report.input;
  os << "input: genus=" << in.genus << " a=" << in.a << " b=" << in.b << " points:";
  for (const auto& p : in.points)
    os << " (" << p.alpha1.to_string() << ", " << p.alpha2.to_string() << ", "
       << p.eta.to_string() << ")";
  os << "\n";
  if (report.derived.case_label) os << "case: " << to_string(*report.derived.case_label) << "\n";
  os << "tau: " << report.derived.tau.to_string() << "   delta: " << report.derived.delta
     << "   method: " << to_string(report.method) << (report.dualized ? "   (dualized)" : "")
     << "\n";
  os << "P_t(U)   = " << report.poincare.to_string() << "\n";
  os << "  N(1,1,1) part = " << report.n111_contribution.to_string() << "\n";
  os << "  minima part   = " << report.triples_contribution.to_string() << "\n";
  os << "complex dimension: " << report.complex_dimension
     << "   euler characteristic: " << report.euler_characteristic.get_str() << "\n";
  os << "palindrome(own degree): " << (report.duality_palindrome ? "yes" : "no")
     << "   palindrome(2*dim): " << (report.palindrome_about_2dim ? "yes" : "no") << "\n";
  for (const auto& n : report.discrepancies)
    os << "note [" << n.kind << "]: " << n.detail << "\n";
  return os.str();
}

}  // namespace parahiggs::io
