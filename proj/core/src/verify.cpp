#include "parahiggs/verify.hpp"

#include <array>
#include <sstream>

#include "parahiggs/assembly.hpp"
#include "parahiggs/errors.hpp"
#include "parahiggs/strata111.hpp"
#include "parahiggs/triples.hpp"

namespace parahiggs {

WeightPoint representative_point(DistributionCase c) {
  auto r = [](long long n, long long d) { return Rational(n, d); };
  switch (c) {
    case DistributionCase::S1a: return {r(2, 10), r(6, 10), r(1, 10)};
    case DistributionCase::S1b: return {r(5, 10), r(6, 10), r(1, 10)};
    case DistributionCase::S2: return {r(1, 10), r(6, 10), r(3, 10)};
    case DistributionCase::S3a: return {r(4, 10), r(5, 10), r(9, 10)};
    case DistributionCase::S3b: return {r(1, 10), r(5, 10), r(6, 10)};
    case DistributionCase::S4: return {r(3, 10), r(7, 10), r(3, 10)};
    case DistributionCase::S5: return {r(1, 10), r(5, 10), r(5, 10)};
    case DistributionCase::S6: return {r(5, 10), r(5, 10), r(5, 10)};
    case DistributionCase::S7: return {r(5, 10), r(5, 10), r(1, 10)};
    case DistributionCase::S8: return {r(3, 10), r(3, 10), r(8, 10)};
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string describe(const ModuliInput& in, DistributionCase label) {
  std::ostringstream os;
  const auto& p = in.points.front();
  os << "g=" << in.genus << " a=" << in.a << " b=" << in.b << " case=" << to_string(label)
     << " (" << p.alpha1.to_string() << ", " << p.alpha2.to_string() << ", "
     << p.eta.to_string() << ")";
  return os.str();
}

void expect_equal(VerifyReport& report, const std::string& check, const std::string& input_desc,
                  const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs != rhs)
    report.failures.push_back({check, input_desc, lhs.to_string(), rhs.to_string()});
}

// [x^m](1-x)^n for any integer n; the independent route used to pin down
// the t = -1 value of the symmetric-product polynomials.
mpz_class binomial_series_coeff(long long n, long long m) {
  if (m < 0) return 0;
  mpz_class out;
  if (n >= 0) {
    if (m > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    if (m % 2 != 0) out = -out;
    return out;
  }
  const long long k = -n;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m + k - 1),
               static_cast<unsigned long>(k - 1));
  return out;
}

void check_macdonald_block(VerifyReport& report) {
  for (long long g = 0; g <= 4; ++g) {
    for (long long m = -2; m <= 12; ++m) {
      ++report.property_checks;
      const LaurentPoly p = macdonald_sym(g, m);
      const std::string desc = "macdonald g=" + std::to_string(g) + " m=" + std::to_string(m);
      if (m < 0) {
        if (!p.is_zero())
          report.failures.push_back({"macdonald-negative-m", desc, p.to_string(), "0"});
        continue;
      }
      if (p.is_zero() || !p.is_polynomial() || p.degree() != 2 * m || p.coeff(2 * m) != 1) {
        report.failures.push_back(
            {"macdonald-shape", desc, p.is_zero() ? "0" : p.to_string(),
             "degree 2m, unit leading coefficient"});
        continue;
      }
      bool nonneg = true;
      for (const auto& [e, c] : p.terms())
        if (c < 0) nonneg = false;
      if (!nonneg)
        report.failures.push_back({"macdonald-nonnegative", desc, p.to_string(), ""});
      const mpz_class at_minus_one = p.eval_unit(-1);
      const mpz_class oracle = binomial_series_coeff(2 * g - 2, m);
      if (at_minus_one != oracle)
        report.failures.push_back({"macdonald-euler", desc, at_minus_one.get_str(),
                                   oracle.get_str()});
    }
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;

  CaseTable111 table = default_case_table();
  if (options.corrupt_closed_table) {
    // shift one chamber's t-exponent; every S3b comparison must now fail
    table[DistributionCase::S3b].t_off += 2;
  }

  static const std::array<DistributionCase, 10> all_cases = {
      DistributionCase::S1a, DistributionCase::S1b, DistributionCase::S2,
      DistributionCase::S3a, DistributionCase::S3b, DistributionCase::S4,
      DistributionCase::S5,  DistributionCase::S6,  DistributionCase::S7,
      DistributionCase::S8};
  const std::vector<DistributionCase> cases =
      options.cases.empty() ? std::vector<DistributionCase>(all_cases.begin(), all_cases.end())
                            : options.cases;

  std::vector<std::pair<long long, long long>> pairs;
  if (options.degree_pairs) {
    pairs = *options.degree_pairs;
  } else {
    for (long long delta : options.deltas)
      for (long long a = -3; a <= 3; ++a) {
        const long long b = delta - a;
        if (b >= -3 && b <= 3) pairs.emplace_back(a, b);
      }
  }

  for (long long g : options.genus) {
    for (const auto& [a, b] : pairs) {
      for (DistributionCase label : cases) {
        ModuliInput input;
        input.genus = g;
        input.a = a;
        input.b = b;
        input.points = {representative_point(label)};

        if (!(toledo(input) < Rational(0))) {
          ++report.inputs_skipped;
          continue;
        }
        ++report.inputs_checked;
        const std::string desc = describe(input, label);

        // two routes for the (1,1,1) strata
        const LaurentPoly direct = n111_direct(input);
        const LaurentPoly closed = n111_closed_with_table(input, table);
        expect_equal(report, "n111 direct vs closed", desc, direct, closed);

        // two routes for the minima stratum
        const TriplesSpec spec = TriplesSpec::from_input(input);
        const LaurentPoly tri_gen = triples_generic(spec);
        const LaurentPoly tri_closed = triples_closed(spec);
        expect_equal(report, "triples generic vs closed", desc, tri_gen, tri_closed);

        // stratum bookkeeping: even Morse indices, multiplicities stepping
        // down by exactly one per unit of d0
        for (const Stratum111& st : enumerate_strata(input, true)) {
          ++report.property_checks;
          if (st.lambda % 2 != 0)
            report.failures.push_back({"odd-morse-index", desc,
                                       std::to_string(st.lambda), "even"});
          if (st.m1 != input.b - st.d0 + 2 * g - 2 + st.ind.v1 ||
              st.m2 != input.delta() - st.d0 - 2 * input.b + 2 * g - 2 + st.ind.v2)
            report.failures.push_back({"multiplicity-formula", desc, "", ""});
        }

        // assembled polynomial invariants; an all-zero result means the
        // moduli space is empty at these degrees and weights
        const LaurentPoly total = direct + tri_gen;
        if (!total.is_polynomial())
          report.failures.push_back({"negative-t-power", desc, total.to_string(), ""});
        if (!total.is_zero()) {
          if (total.constant_term() != 1)
            report.failures.push_back(
                {"constant-term", desc, total.constant_term().get_str(), "1"});
          for (const auto& [e, c] : total.terms())
            if (c < 0) {
              report.failures.push_back({"negative-betti", desc, total.to_string(), ""});
              break;
            }
        }

        // dual input computes the same polynomial through the tau > 0 path
        const ModuliReport here = poincare_U(input, Method::closed);
        const ModuliReport dual = poincare_U(dualize(input), Method::closed);
        expect_equal(report, "dualization invariance", desc, here.poincare, dual.poincare);
      }
    }
  }

  check_macdonald_block(report);
  return report;
}

}  // namespace parahiggs
