#ifndef PARAHIGGS_ASSEMBLY_HPP
#define PARAHIGGS_ASSEMBLY_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "parahiggs/laurent.hpp"
#include "parahiggs/strata111.hpp"
#include "parahiggs/weights.hpp"

namespace parahiggs {

enum class Method { closed, direct, both };

std::string to_string(Method m);

/// A structured remark attached to a report (dimension/degree mismatch,
/// duality failure, orientation change, ...). Informational, never fatal.
struct Note {
  std::string kind;
  std::string detail;
};

struct ModuliReport {
  ModuliInput input;           // as given
  Derived derived;             // of the given input
  bool dualized = false;       // tau > 0, computed on the dual instead
  ModuliInput computed_input;  // the tau < 0 side actually evaluated
  Method method = Method::both;

  LaurentPoly n111_contribution;
  LaurentPoly triples_contribution;
  LaurentPoly poincare;  // n111 + triples (minima enter with Morse index 0)

  std::vector<mpz_class> betti;      // coefficient k of t^k
  long long complex_dimension = 0;   // 1 + 9(g-1) + sum_x (3 - c)
  mpz_class euler_characteristic;    // value at t = -1
  bool duality_palindrome = false;   // palindromic about the polynomial degree
  bool palindrome_about_2dim = false;
  std::vector<Note> discrepancies;
};

/// Complex dimension 1 + 9(g-1) + sum over marked points of (3 - c),
/// where c counts the V-weights equal to eta at that point.
long long dimension(const ModuliInput& input);

/// Assembles P_t(U) = N(1,1,1) contribution + minima contribution for one
/// marked point. Inputs with tau > 0 are dualized first (recorded in the
/// report). Method both evaluates the chamber formulas and the direct
/// sums and requires exact agreement (MethodMismatch otherwise). The
/// direct-path flags only apply when method == direct.
ModuliReport poincare_U(const ModuliInput& input, Method method, DirectFlags flags = {});

/// Recomputes the derived fields (betti, euler characteristic, palindrome
/// flags, notes) from report.poincare. poincare_U already calls this.
void diagnostics(ModuliReport& report);

}  // namespace parahiggs

#endif
