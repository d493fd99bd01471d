#ifndef PARAHIGGS_WEIGHTS_HPP
#define PARAHIGGS_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parahiggs/rational.hpp"

namespace parahiggs {

/// Parabolic weights over one marked point: alpha1 <= alpha2 on the rank-2
/// bundle V, eta on the line bundle W. All in [0, 1).
struct WeightPoint {
  Rational alpha1;
  Rational alpha2;
  Rational eta;

  bool operator==(const WeightPoint&) const = default;
};

/// Chamber labels for the relative position of (alpha1, alpha2, eta) at a
/// single marked point. S1 and S3 split by which of the two gaps is wider.
enum class DistributionCase { S1a, S1b, S2, S3a, S3b, S4, S5, S6, S7, S8 };

std::string to_string(DistributionCase c);
std::optional<DistributionCase> case_from_string(const std::string& name);

/// Full problem input: genus, degrees a = deg V and b = deg W, and one
/// weight point per marked point.
struct ModuliInput {
  long long genus = 0;
  long long a = 0;
  long long b = 0;
  std::vector<WeightPoint> points;

  long long s() const { return static_cast<long long>(points.size()); }
  long long delta() const { return a + b; }

  bool operator==(const ModuliInput&) const = default;
};

/// Validated quantities derived from a ModuliInput.
struct Derived {
  long long delta = 0;
  Rational tau;
  /// Set when there is exactly one marked point (closed formulas need it).
  std::optional<DistributionCase> case_label;
};

/// Toledo invariant tau = (2/3)(Delta - 3b + sum_x(alpha1 + alpha2 - 2 eta)).
Rational toledo(const ModuliInput& input);

/// The unique chamber label of a weight point. Sub-cases compare
/// alpha2-alpha1 against alpha1-eta (S1) and eta-alpha2 against
/// alpha2-alpha1 (S3); equality between sub-cases is rejected with
/// UnclassifiableWeights since no closed formula covers the boundary.
DistributionCase classify(const WeightPoint& p);

/// Checks all invariants and returns the derived data. Throws
/// InvalidWeights (range or ordering violations), UnsupportedDelta
/// (a + b not divisible by 3), NonGenericWeights (tau = 0), and, for
/// one-puncture inputs, propagates UnclassifiableWeights from classify.
Derived validate(const ModuliInput& input);

/// The dual input: degrees negate and every weight w becomes 1 - w with
/// order restored; a weight equal to 0 stays 0. The induced isomorphism
/// of moduli spaces makes this the bridge from tau > 0 to tau < 0.
ModuliInput dualize(const ModuliInput& input);

}  // namespace parahiggs

#endif
