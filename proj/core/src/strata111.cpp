#include "parahiggs/strata111.hpp"

#include <stdexcept>

#include "factors.hpp"
#include "parahiggs/errors.hpp"

namespace parahiggs {

std::vector<Distribution> Distribution::all(int s) {
  if (s < 1 || s > 30) throw std::logic_error("unsupported number of marked points");
  std::vector<Distribution> out;
  out.reserve(1u << s);
  for (std::uint32_t bits = 0; bits < (1u << s); ++bits) out.emplace_back(bits, s);
  return out;
}

Indicators indicators(const ModuliInput& input, const Distribution& dist) {
  Indicators ind;
  for (int i = 0; i < static_cast<int>(input.points.size()); ++i) {
    const WeightPoint& p = input.points[static_cast<std::size_t>(i)];
    const Rational& w0 = dist.weight_e0(p, i);
    const Rational& w2 = dist.weight_e2(p, i);
    if (w0 <= w2) ++ind.v;
    if (w0 < p.eta) ++ind.v1;
    if (p.eta < w2) ++ind.v2;
  }
  return ind;
}

long long d0_lower_bound(const ModuliInput& input, const Distribution& dist) {
  Rational acc(input.delta());
  for (int i = 0; i < static_cast<int>(input.points.size()); ++i) {
    const WeightPoint& p = input.points[static_cast<std::size_t>(i)];
    const Rational& w0 = dist.weight_e0(p, i);
    const Rational& w2 = dist.weight_e2(p, i);
    acc = acc + p.eta + w2 - w0 - w0;
  }
  const Rational value = acc / Rational(3) + Rational(1);
  return value.floor().get_si();
}

long long morse_index_111(long long g, long long s, long long d0, long long delta, long long b,
                          long long v) {
  return 2 * g - 2 + 2 * (2 * d0 - delta + b) + 2 * (s - v);
}

LaurentPoly macdonald_sym(long long g, long long m) {
  if (g < 0) throw std::logic_error("negative genus");
  if (m < 0) return LaurentPoly::zero();
  CoeffExpr expr;
  expr.numerators.push_back(factors::one_plus_tx_pow(static_cast<unsigned long>(2 * g)));
  expr.denominators.push_back(factors::one_minus_x());
  expr.denominators.push_back(factors::one_minus_tk_x(2));
  return extract_coeff_x(expr, m);
}

namespace {

void require_negative_tau(const ModuliInput& input) {
  if (!(toledo(input) < Rational(0)))
    throw BadInput("requires tau < 0; dualize the input first");
}

}  // namespace

std::vector<Stratum111> enumerate_strata(const ModuliInput& input, bool sum_all_d0) {
  const long long g = input.genus;
  const long long s = input.s();
  const long long delta = input.delta();
  const long long b = input.b;

  std::vector<Stratum111> out;
  for (const Distribution& dist : Distribution::all(static_cast<int>(s))) {
    const Indicators ind = indicators(input, dist);
    const long long lo = d0_lower_bound(input, dist);
    for (long long d0 = lo;; ++d0) {
      Stratum111 st{d0, dist, ind, 0, 0, 0};
      st.m1 = b - d0 + 2 * g - 2 + ind.v1;
      st.m2 = delta - d0 - 2 * b + 2 * g - 2 + ind.v2;
      st.lambda = morse_index_111(g, s, d0, delta, b, ind.v);
      if (!sum_all_d0) {
        out.push_back(st);
        break;
      }
      if (st.m1 < 0 || st.m2 < 0) break;  // both decrease strictly in d0
      out.push_back(st);
    }
  }
  return out;
}

LaurentPoly n111_direct(const ModuliInput& input, DirectFlags flags) {
  validate(input);
  require_negative_tau(input);

  const LaurentPoly jacobian =
      factors::one_plus_t_pow(static_cast<unsigned long>(2 * input.genus));

  LaurentPoly total;
  for (const Stratum111& st : enumerate_strata(input, flags.sum_all_d0)) {
    LaurentPoly term = LaurentPoly::t(st.lambda) * macdonald_sym(input.genus, st.m1) *
                       macdonald_sym(input.genus, st.m2);
    if (flags.include_jacobian) term *= jacobian;
    total += term;
  }
  return total;
}

const CaseTable111& default_case_table() {
  using M = ClosedCase111::Mixed;
  static const CaseTable111 table = {
      {DistributionCase::S1a, {0, 2, 1, false, M::xy, 1}},
      {DistributionCase::S1b, {-2, 2, 1, true, M::none, 1}},
      {DistributionCase::S2, {0, 2, 2, true, M::none, 1}},
      {DistributionCase::S3a, {2, 2, 3, true, M::none, 1}},
      {DistributionCase::S3b, {0, 1, 2, false, M::xy, 1}},
      {DistributionCase::S4, {0, 2, 2, false, M::x, 1}},
      {DistributionCase::S5, {0, 2, 2, false, M::y, 1}},
      {DistributionCase::S6, {2, 3, 3, false, M::none, 2}},
      {DistributionCase::S7, {-2, 2, 1, false, M::none, 2}},
      // printed exponent -2 + 2b + 4(1 + Delta/3) - 2Delta + 2g reduces to
      // 2 + 2b - 2Delta/3 + 2g whenever Delta is divisible by 3
      {DistributionCase::S8, {2, 2, 3, false, M::none, 2}},
  };
  return table;
}

LaurentPoly n111_closed_with_table(const ModuliInput& input, const CaseTable111& table) {
  const Derived derived = validate(input);
  require_negative_tau(input);
  if (input.s() != 1)
    throw UnsupportedPunctures("closed forms cover exactly one marked point, got " +
                               std::to_string(input.s()));

  const long long g = input.genus;
  const long long b = input.b;
  const long long d3 = derived.delta / 3;
  const ClosedCase111& c = table.at(*derived.case_label);

  CoeffExpr expr;
  expr.scalar = LaurentPoly(c.mult) * LaurentPoly::t(c.t_off + 2 * b - 2 * d3 + 2 * g);
  if (c.one_plus_t2) expr.scalar *= factors::one_plus_t2();
  expr.x_shift = c.x_off - b + d3 - 2 * g;
  expr.y_shift = c.y_off + 2 * b - 2 * d3 - 2 * g;
  expr.numerators.push_back(factors::one_plus_tx_pow(static_cast<unsigned long>(2 * g)));
  expr.numerators.push_back(factors::one_plus_ty_pow(static_cast<unsigned long>(2 * g)));
  switch (c.mixed) {
    case ClosedCase111::Mixed::none: break;
    case ClosedCase111::Mixed::xy: expr.numerators.push_back(factors::one_plus_t2_xy()); break;
    case ClosedCase111::Mixed::x: expr.numerators.push_back(factors::one_plus_t2_x()); break;
    case ClosedCase111::Mixed::y: expr.numerators.push_back(factors::one_plus_t2_y()); break;
  }
  expr.denominators.push_back(factors::one_minus_x());
  expr.denominators.push_back(factors::one_minus_tk_x(2));
  expr.denominators.push_back(factors::one_minus_y());
  expr.denominators.push_back(factors::one_minus_tk_y(2));

  return extract_coeff(expr, 0, 0);
}

LaurentPoly n111_closed(const ModuliInput& input) {
  return n111_closed_with_table(input, default_case_table());
}

}  // namespace parahiggs
