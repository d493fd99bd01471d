#ifndef PARAHIGGS_STRATA111_HPP
#define PARAHIGGS_STRATA111_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "parahiggs/laurent.hpp"
#include "parahiggs/weights.hpp"

namespace parahiggs {

/// Assignment of the two V-weights to the line subbundles E0 and E2, one
/// choice per marked point. Bit i set means the weights are swapped at
/// point i (E0 receives alpha2 there). 2^s distributions exist.
class Distribution {
 public:
  Distribution(std::uint32_t bits, int s) : bits_(bits), s_(s) {}

  static std::vector<Distribution> all(int s);

  int points() const { return s_; }
  bool swapped_at(int i) const { return (bits_ >> i) & 1u; }
  bool is_identity() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  /// Weight assigned to E0 / E2 at point i.
  const Rational& weight_e0(const WeightPoint& p, int i) const {
    return swapped_at(i) ? p.alpha2 : p.alpha1;
  }
  const Rational& weight_e2(const WeightPoint& p, int i) const {
    return swapped_at(i) ? p.alpha1 : p.alpha2;
  }

 private:
  std::uint32_t bits_;
  int s_;
};

/// Point counts controlling multiplicities and the Morse index:
///   v  = #{x : w_e0(x) <= w_e2(x)}
///   v1 = #{x : w_e0(x) <  eta(x)}
///   v2 = #{x : eta(x)  <  w_e2(x)}
struct Indicators {
  long long v = 0;
  long long v1 = 0;
  long long v2 = 0;
};

Indicators indicators(const ModuliInput& input, const Distribution& dist);

/// Smallest admissible deg E0 for the given distribution:
/// floor((1/3)(Delta + sum_x(eta + w_e2 - 2 w_e0)) + 1). Requires tau < 0.
long long d0_lower_bound(const ModuliInput& input, const Distribution& dist);

/// Morse index 2g - 2 + 2(2 d0 - Delta + b) + 2(s - v); always even.
long long morse_index_111(long long g, long long s, long long d0, long long delta, long long b,
                          long long v);

/// Poincare polynomial of the m-th symmetric product of a genus-g surface
/// by Macdonald's formula: coefficient of x^m in (1+xt)^2g/((1-x)(1-t^2 x)).
/// Zero for m < 0; otherwise degree 2m with unit leading coefficient.
LaurentPoly macdonald_sym(long long g, long long m);

/// One critical submanifold of type (1,1,1).
struct Stratum111 {
  long long d0 = 0;
  Distribution dist;
  Indicators ind;
  long long m1 = 0;    // b - d0 + 2g - 2 + v1
  long long m2 = 0;    // Delta - d0 - 2b + 2g - 2 + v2
  long long lambda = 0;
};

/// All strata that enter the direct sum. With sum_all_d0 the walk starts
/// at the lower bound and stops once m1 or m2 turns negative (both drop
/// by one per unit of d0, so this terminates); without it only d0 = bound
/// is listed, even when its multiplicities are already negative (such a
/// stratum contributes 0).
std::vector<Stratum111> enumerate_strata(const ModuliInput& input, bool sum_all_d0);

struct DirectFlags {
  /// Multiply each stratum by (1+t)^2g, the Jacobian factor.
  bool include_jacobian = false;
  /// Sum over all admissible d0 instead of only the lower bound.
  bool sum_all_d0 = false;
};

/// Direct evaluation: sum over distributions and d0 of
/// t^lambda * P_t(S^m1 X) * P_t(S^m2 X), optionally times (1+t)^2g.
/// Works for any number of marked points. Requires tau < 0.
LaurentPoly n111_direct(const ModuliInput& input, DirectFlags flags = {});

/// Shape of one chamber's closed coefficient expression. The extracted
/// expression is
///   mult * t^(t_off + 2b - 2Delta/3 + 2g) * [1+t^2]
///     * x^(x_off - b + Delta/3 - 2g) * y^(y_off + 2b - 2Delta/3 - 2g)
///     * (1+tx)^2g (1+ty)^2g * [mixed] / ((1-x)(1-t^2 x)(1-y)(1-t^2 y))
/// at x^0 y^0.
struct ClosedCase111 {
  enum class Mixed { none, xy, x, y };  // (1+t^2 xy), (1+t^2 x), (1+t^2 y)
  int t_off = 0;
  int x_off = 0;
  int y_off = 0;
  bool one_plus_t2 = false;
  Mixed mixed = Mixed::none;
  int mult = 1;
};

using CaseTable111 = std::map<DistributionCase, ClosedCase111>;

/// The ten chamber expressions.
const CaseTable111& default_case_table();

/// Closed-form evaluation for one marked point via the chamber table.
/// Requires s = 1 (UnsupportedPunctures otherwise) and tau < 0.
LaurentPoly n111_closed(const ModuliInput& input);
LaurentPoly n111_closed_with_table(const ModuliInput& input, const CaseTable111& table);

}  // namespace parahiggs

#endif
