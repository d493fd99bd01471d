#include "parahiggs/weights.hpp"

#include <array>

#include "parahiggs/errors.hpp"

namespace parahiggs {

std::string to_string(DistributionCase c) {
  switch (c) {
    case DistributionCase::S1a: return "S1a";
    case DistributionCase::S1b: return "S1b";
    case DistributionCase::S2: return "S2";
    case DistributionCase::S3a: return "S3a";
    case DistributionCase::S3b: return "S3b";
    case DistributionCase::S4: return "S4";
    case DistributionCase::S5: return "S5";
    case DistributionCase::S6: return "S6";
    case DistributionCase::S7: return "S7";
    case DistributionCase::S8: return "S8";
  }
  return "?";
}

std::optional<DistributionCase> case_from_string(const std::string& name) {
  static const std::array<DistributionCase, 10> all = {
      DistributionCase::S1a, DistributionCase::S1b, DistributionCase::S2,
      DistributionCase::S3a, DistributionCase::S3b, DistributionCase::S4,
      DistributionCase::S5,  DistributionCase::S6,  DistributionCase::S7,
      DistributionCase::S8};
  for (auto c : all)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

namespace {

void check_point(const WeightPoint& p) {
  const Rational zero(0), one(1);
  if (!(zero <= p.alpha1 && p.alpha1 <= p.alpha2 && p.alpha2 < one))
    throw InvalidWeights("need 0 <= alpha1 <= alpha2 < 1, got alpha1=" + p.alpha1.to_string() +
                         " alpha2=" + p.alpha2.to_string());
  if (!(zero <= p.eta && p.eta < one))
    throw InvalidWeights("need 0 <= eta < 1, got eta=" + p.eta.to_string());
}

}  // namespace

Rational toledo(const ModuliInput& input) {
  Rational acc(input.delta() - 3 * input.b);
  for (const auto& p : input.points) acc = acc + p.alpha1 + p.alpha2 - p.eta - p.eta;
  return Rational(2, 3) * acc;
}

DistributionCase classify(const WeightPoint& p) {
  check_point(p);
  const auto& a1 = p.alpha1;
  const auto& a2 = p.alpha2;
  const auto& eta = p.eta;

  if (a1 < a2) {
    if (eta < a1) {
      // S1: eta < alpha1 < alpha2, split on the wider gap
      if (a2 - a1 > a1 - eta) return DistributionCase::S1a;
      if (a2 - a1 < a1 - eta) return DistributionCase::S1b;
      throw UnclassifiableWeights("α₂−α₁ = α₁−η");
    }
    if (eta == a1) return DistributionCase::S4;
    if (eta < a2) return DistributionCase::S2;
    if (eta == a2) return DistributionCase::S5;
    // S3: alpha1 < alpha2 < eta
    if (eta - a2 > a2 - a1) return DistributionCase::S3a;
    if (eta - a2 < a2 - a1) return DistributionCase::S3b;
    throw UnclassifiableWeights("η−α₂ = α₂−α₁");
  }
  // alpha1 == alpha2
  if (eta < a1) return DistributionCase::S7;
  if (eta == a1) return DistributionCase::S6;
  return DistributionCase::S8;
}

Derived validate(const ModuliInput& input) {
  if (input.genus < 0) throw BadInput("genus must be >= 0");
  if (input.points.empty()) throw BadInput("need at least one marked point");
  for (const auto& p : input.points) check_point(p);

  Derived out;
  out.delta = input.delta();
  if (((out.delta % 3) + 3) % 3 != 0)
    throw UnsupportedDelta("Δ=" + std::to_string(out.delta) + " not ≡ 0 (mod 3)");

  out.tau = toledo(input);
  if (out.tau == Rational(0))
    throw NonGenericWeights("τ=0: weight system is not generic (Δ−3b = 2η−α₁−α₂ summed)");

  if (input.s() == 1) out.case_label = classify(input.points.front());
  return out;
}

ModuliInput dualize(const ModuliInput& input) {
  ModuliInput out;
  out.genus = input.genus;
  out.a = -input.a;
  out.b = -input.b;
  out.points.reserve(input.points.size());
  const Rational zero(0), one(1);
  for (const auto& p : input.points) {
    WeightPoint q;
    if (p.alpha1 == zero) {
      // weight 0 is kept in place; only the remaining weights reflect
      q.alpha1 = zero;
      q.alpha2 = (p.alpha2 == zero) ? zero : one - p.alpha2;
    } else {
      q.alpha1 = one - p.alpha2;
      q.alpha2 = one - p.alpha1;
    }
    q.eta = (p.eta == zero) ? zero : one - p.eta;
    out.points.push_back(q);
  }
  return out;
}

}  // namespace parahiggs
