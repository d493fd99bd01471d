#include "parahiggs/triples.hpp"

#include <string>

#include "factors.hpp"
#include "parahiggs/errors.hpp"

namespace parahiggs {

TriplesSpec TriplesSpec::from_input(const ModuliInput& input) {
  if (input.s() != 1)
    throw UnsupportedPunctures("triples formulas cover exactly one marked point, got " +
                               std::to_string(input.s()));
  TriplesSpec spec;
  spec.genus = input.genus;
  spec.b = input.b;
  spec.delta = input.delta();
  spec.sigma = 2 * input.genus - 2;
  spec.point = input.points.front();
  spec.d1 = input.a + 4 * input.genus - 4;
  spec.d2 = input.b;
  return spec;
}

namespace {

const Rational& w1_of(const TriplesSpec& spec, bool swapped) {
  return swapped ? spec.point.alpha2 : spec.point.alpha1;
}
const Rational& w2_of(const TriplesSpec& spec, bool swapped) {
  return swapped ? spec.point.alpha1 : spec.point.alpha2;
}

}  // namespace

long long dM_bound(const TriplesSpec& spec, bool swapped) {
  if (spec.point.alpha1 == spec.point.alpha2 && !swapped)
    return spec.delta / 3 + 2 * spec.genus - 1;
  const Rational& w1 = w1_of(spec, swapped);
  const Rational& w2 = w2_of(spec, swapped);
  const Rational inner =
      Rational(spec.d1 + spec.d2 + spec.sigma) + w2 + spec.point.eta - w1 - w1;
  return (inner / Rational(3) + Rational(1)).floor().get_si();
}

TripleIndicators triple_indicators(const TriplesSpec& spec, bool swapped) {
  TripleIndicators ind;
  ind.v1 = spec.point.eta < w2_of(spec, swapped) ? 1 : 0;
  ind.v2 = spec.point.eta < w1_of(spec, swapped) ? 1 : 0;
  ind.v3 = swapped ? 0 : 1;
  ind.dM = dM_bound(spec, swapped);
  return ind;
}

namespace {

LaurentPoly finish(LaurentPoly raw, const char* route) {
  auto q = raw.div_exact(LaurentPoly::one() - LaurentPoly::t(2));
  if (!q)
    throw NonPolynomialResult(std::string(route) + ": (1 - t^2) does not divide " +
                              raw.to_string());
  if (!q->is_polynomial())
    throw NonPolynomialResult(std::string(route) + ": negative t powers survive in " +
                              q->to_string());
  return *q;
}

}  // namespace

LaurentPoly triples_generic(const TriplesSpec& spec) {
  const long long g = spec.genus;
  const unsigned long twog = static_cast<unsigned long>(2 * g);

  LaurentPoly acc;
  for (bool swapped : {false, true}) {
    const TripleIndicators ind = triple_indicators(spec, swapped);
    const long long xs = ind.dM - spec.d1 + spec.d2 - ind.v1;
    const long long a_exp = 2 * spec.d1 - 2 * spec.d2 + 2 * ind.v2 + 2 * ind.v3 - 2 * ind.dM;
    const long long b_exp = -2 * spec.d1 + 2 * g - 2 * ind.v3 + 4 * ind.dM;

    CoeffExpr lhs;
    lhs.scalar = LaurentPoly::t(a_exp);
    lhs.x_shift = xs;
    lhs.numerators.push_back(factors::one_plus_tx_pow(twog));
    lhs.denominators.push_back(factors::one_minus_x());
    lhs.denominators.push_back(factors::one_minus_tk_x(2));
    lhs.denominators.push_back(factors::one_minus_tk_x(-2));

    CoeffExpr rhs;
    rhs.scalar = LaurentPoly::t(b_exp);
    rhs.x_shift = xs;
    rhs.numerators.push_back(factors::one_plus_tx_pow(twog));
    rhs.denominators.push_back(factors::one_minus_x());
    rhs.denominators.push_back(factors::one_minus_tk_x(2));
    rhs.denominators.push_back(factors::one_minus_tk_x(4));

    acc += extract_coeff_x(lhs, 0) - extract_coeff_x(rhs, 0);
  }
  acc *= factors::one_plus_t_pow(static_cast<unsigned long>(4 * g));
  return finish(std::move(acc), "triples_generic");
}

TripleCaseGroup triple_case_group(DistributionCase c) {
  switch (c) {
    case DistributionCase::S1a:
    case DistributionCase::S7: return TripleCaseGroup::S1aS7;
    case DistributionCase::S1b: return TripleCaseGroup::S1b;
    case DistributionCase::S2:
    case DistributionCase::S4: return TripleCaseGroup::S2S4;
    case DistributionCase::S3a:
    case DistributionCase::S6:
    case DistributionCase::S8: return TripleCaseGroup::S3aS6S8;
    case DistributionCase::S3b:
    case DistributionCase::S5: return TripleCaseGroup::S3bS5;
  }
  throw std::logic_error("unreachable");
}

namespace {

// One inner-numerator term: sign * t^t_exp * x^x_exp.
struct InnerTerm {
  int x_exp;
  long long t_exp;
  int sign;
};

struct ClosedGroupSpec {
  int sign;          // overall sign once every denominator factor is
                     // normalized to the (1 - ...) orientation
  long long k_exp;   // power of t dividing the whole expression
  long long x_off;   // x exponent = x_off + 2b - 2*Delta/3 - 2g
  bool one_plus_t2;
  std::vector<InnerTerm> inner;
};

ClosedGroupSpec closed_group_spec(TripleCaseGroup grp, long long g, long long b, long long d3) {
  const long long delta = 3 * d3;
  switch (grp) {
    case TripleCaseGroup::S1aS7:
      return {+1, 4 * b + 2 * d3 - 2 * g, 1, false,
              {{0, 2 * delta + 2 * g, +1},
               {0, 2 + 6 * b, -1},
               {1, 6 * b, +1},
               {1, 4 + 6 * b, -1},
               {1, 2 * delta + 2 * g, +1},
               {1, 4 + 2 * delta + 2 * g, -1},
               {2, 2 + 6 * b, +1},
               {2, 4 + 2 * delta + 2 * g, -1}}};
    case TripleCaseGroup::S1b:
      return {-1, 2 + 4 * b + 2 * d3 - 2 * g, 1, true,
              {{0, 2 + 6 * b, +1},
               {0, 2 + 2 * delta + 2 * g, -1},
               {1, 6 * b, -1},
               {1, 6 + 2 * delta + 2 * g, +1}}};
    case TripleCaseGroup::S2S4:
      return {-1, 2 + 4 * b + 2 * d3 - 2 * g, 2, true,
              {{0, 4 + 6 * b, +1},
               {0, 2 * delta + 2 * g, -1},
               {1, 2 + 6 * b, -1},
               {1, 4 + 2 * delta + 2 * g, +1}}};
    case TripleCaseGroup::S3aS6S8:
      return {-1, 4 + 4 * b + 2 * d3 - 2 * g, 3, true,
              {{0, 8 + 6 * b, +1},
               {0, 2 * delta + 2 * g, -1},
               {1, 6 + 6 * b, -1},
               {1, 4 + 2 * delta + 2 * g, +1}}};
    case TripleCaseGroup::S3bS5:
      return {+1, 2 + 4 * b + 2 * d3 - 2 * g, 2, false,
              {{0, 2 * delta + 2 * g, +1},
               {0, 4 + 6 * b, -1},
               {1, 2 + 6 * b, +1},
               {1, 6 + 6 * b, -1},
               {1, 2 * delta + 2 * g, +1},
               {1, 4 + 2 * delta + 2 * g, -1},
               {2, 4 + 6 * b, +1},
               {2, 4 + 2 * delta + 2 * g, -1}}};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LaurentPoly triples_closed(const TriplesSpec& spec) {
  const DistributionCase label = classify(spec.point);
  const long long g = spec.genus;
  const long long b = spec.b;
  const long long d3 = spec.delta / 3;
  const ClosedGroupSpec cs = closed_group_spec(triple_case_group(label), g, b, d3);

  BiPoly inner;
  for (const InnerTerm& term : cs.inner)
    inner.add_term(term.x_exp, 0, LaurentPoly::monomial(term.sign, term.t_exp));

  CoeffExpr expr;
  expr.scalar = LaurentPoly(cs.sign) * LaurentPoly::t(-cs.k_exp) *
                factors::one_plus_t_pow(static_cast<unsigned long>(4 * g));
  if (cs.one_plus_t2) expr.scalar *= factors::one_plus_t2();
  expr.x_shift = cs.x_off + 2 * b - 2 * d3 - 2 * g;
  expr.numerators.push_back(factors::one_plus_tx_pow(static_cast<unsigned long>(2 * g)));
  expr.numerators.push_back(inner);
  expr.denominators.push_back(factors::t2_minus_x());
  expr.denominators.push_back(factors::one_minus_x());
  expr.denominators.push_back(factors::one_minus_tk_x(2));
  expr.denominators.push_back(factors::one_minus_tk_x(4));

  return finish(extract_coeff_x(expr, 0), "triples_closed");
}

}  // namespace parahiggs
