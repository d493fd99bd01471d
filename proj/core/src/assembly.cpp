#include "parahiggs/assembly.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/triples.hpp"

namespace parahiggs {

std::string to_string(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::direct: return "direct";
    case Method::both: return "both";
  }
  return "?";
}

long long dimension(const ModuliInput& input) {
  long long acc = 1 + 9 * (input.genus - 1);
  for (const auto& p : input.points) {
    long long c = 0;
    if (p.alpha1 == p.eta) ++c;
    if (p.alpha2 == p.eta) ++c;
    acc += 3 - c;
  }
  return acc;
}

namespace {

// Picks per method, comparing exactly when both routes run.
LaurentPoly pick(Method method, const char* part, LaurentPoly closed_value,
                 LaurentPoly direct_value, bool have_closed, bool have_direct) {
  if (method == Method::both && have_closed && have_direct &&
      closed_value != direct_value)
    throw MethodMismatch(std::string(part) + ": closed gives " + closed_value.to_string() +
                         ", direct gives " + direct_value.to_string());
  if (method == Method::direct) return direct_value;
  return closed_value;
}

bool palindromic_about(const std::vector<mpz_class>& c, long long top) {
  // b_k == b_(top-k) with coefficients beyond the stored degree read as 0
  if (top < 0) return c.empty();
  auto at = [&](long long k) -> mpz_class {
    if (k < 0 || k >= static_cast<long long>(c.size())) return 0;
    return c[static_cast<std::size_t>(k)];
  };
  for (long long k = 0; k <= top; ++k)
    if (at(k) != at(top - k)) return false;
  // nothing may stick out beyond the mirror range
  return static_cast<long long>(c.size()) - 1 <= top;
}

}  // namespace

ModuliReport poincare_U(const ModuliInput& input, Method method, DirectFlags flags) {
  ModuliReport report;
  report.input = input;
  report.method = method;
  report.derived = validate(input);

  if (input.s() != 1)
    throw UnsupportedPunctures("assembly covers exactly one marked point, got " +
                               std::to_string(input.s()) +
                               " (the direct (1,1,1) sum is available for any s)");

  report.computed_input = input;
  if (report.derived.tau > Rational(0)) {
    report.computed_input = dualize(input);
    report.dualized = true;
    const Derived dual_derived = validate(report.computed_input);
    if (dual_derived.tau > Rational(0))
      throw BadInput("dual input still has tau > 0 (zero-weight special rule); "
                     "cannot orient the computation");
  }
  const ModuliInput& work = report.computed_input;

  const bool run_closed = method != Method::direct;
  const bool run_direct = method != Method::closed;
  const DirectFlags direct_flags = (method == Method::direct) ? flags : DirectFlags{};

  LaurentPoly n111_c, n111_d, tri_c, tri_d;
  const TriplesSpec spec = TriplesSpec::from_input(work);
  if (run_closed) {
    n111_c = n111_closed(work);
    tri_c = triples_closed(spec);
  }
  if (run_direct) {
    n111_d = n111_direct(work, direct_flags);
    tri_d = triples_generic(spec);
  }

  report.n111_contribution = pick(method, "N(1,1,1)", n111_c, n111_d, run_closed, run_direct);
  report.triples_contribution = pick(method, "minima", tri_c, tri_d, run_closed, run_direct);
  report.poincare = report.n111_contribution + report.triples_contribution;

  if (!report.poincare.is_polynomial())
    throw NonPolynomialResult("assembled Poincare polynomial has negative powers: " +
                              report.poincare.to_string());

  report.complex_dimension = dimension(input);
  diagnostics(report);
  return report;
}

void diagnostics(ModuliReport& report) {
  const LaurentPoly& p = report.poincare;
  report.betti = p.coefficients_ascending();
  report.euler_characteristic = p.eval_unit(-1);

  const long long deg = p.is_zero() ? 0 : p.degree();
  report.duality_palindrome = palindromic_about(report.betti, p.is_zero() ? -1 : deg);
  report.palindrome_about_2dim =
      palindromic_about(report.betti, 2 * report.complex_dimension);

  report.discrepancies.clear();
  if (report.dualized)
    report.discrepancies.push_back(
        {"orientation", "tau > 0; evaluated on the dual input (tau < 0)"});
  if (p.is_zero()) {
    report.discrepancies.push_back({"empty-moduli", "all stratum contributions vanish"});
    return;
  }
  if (deg != 2 * report.complex_dimension)
    report.discrepancies.push_back(
        {"dimension-degree",
         "polynomial degree " + std::to_string(deg) + " differs from 2*dim = " +
             std::to_string(2 * report.complex_dimension)});
  if (!report.duality_palindrome)
    report.discrepancies.push_back(
        {"poincare-duality", "Betti numbers are not palindromic about degree " +
                                 std::to_string(deg)});
  for (const auto& c : report.betti)
    if (c < 0) {
      report.discrepancies.push_back({"negative-betti", "a coefficient is negative"});
      break;
    }
  if (!report.betti.empty() && report.betti.front() != 1)
    report.discrepancies.push_back({"constant-term", "constant term differs from 1"});
}

}  // namespace parahiggs
