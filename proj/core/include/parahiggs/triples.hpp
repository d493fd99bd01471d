#ifndef PARAHIGGS_TRIPLES_HPP
#define PARAHIGGS_TRIPLES_HPP

#include <cstdint>

#include "parahiggs/laurent.hpp"
#include "parahiggs/weights.hpp"

namespace parahiggs {

/// The minima of the Morse function are moduli of sigma-stable parabolic
/// triples of type (2, 1, a + 4g - 4, b) at sigma = 2g - 2. One marked
/// point only.
struct TriplesSpec {
  long long genus = 0;
  long long b = 0;
  long long delta = 0;
  long long sigma = 0;  // always 2g - 2
  WeightPoint point;
  long long d1 = 0;  // a + 4g - 4
  long long d2 = 0;  // b

  static TriplesSpec from_input(const ModuliInput& input);
};

/// Per-distribution data entering the triples formula:
///   v1 = [eta < w2], v2 = [eta < w1], v3 = [dist is the identity],
/// and the degree bound dM for the destabilizing line subbundle.
struct TripleIndicators {
  int v1 = 0;
  int v2 = 0;
  int v3 = 0;
  long long dM = 0;
};

/// Degree bound floor((1/3)(d1 + d2 + w2 + eta - 2 w1 + sigma) + 1), i.e.
/// Delta/3 + 2g - 2 plus one when eta + w2 - 2 w1 >= 0. For equal-weight
/// points the identity-distribution term always takes the larger value
/// Delta/3 + 2g - 1; that pairing is what groups S7 with S1a and S6, S8
/// with S3a in the closed forms, and it is forced by cross-checking the
/// two evaluation routes against each other (see triples_generic).
long long dM_bound(const TriplesSpec& spec, bool swapped);

TripleIndicators triple_indicators(const TriplesSpec& spec, bool swapped);

/// Poincare polynomial of the minima stratum from the general triples
/// formula: Coeff_x0 of
///   (1+t)^4g (1+xt)^2g / ((1-t^2)(1-x)(1-xt^2))
///   * sum over the two distributions of
///       x^(dM - d1 + d2 - v1) *
///       ( t^(2d1 - 2d2 + 2v2 + 2v3 - 2dM) / (1 - t^-2 x)
///         - t^(-2d1 + 2g - 2v3 + 4dM) / (1 - t^4 x) )
/// The 1/(1-t^2) factor is applied as an exact division after extraction;
/// NonPolynomialResult if it does not divide or negative powers survive.
LaurentPoly triples_generic(const TriplesSpec& spec);

/// Closed forms, one expression per case group:
/// {S1a,S7}, {S1b}, {S2,S4}, {S3a,S6,S8}, {S3b,S5}.
LaurentPoly triples_closed(const TriplesSpec& spec);

enum class TripleCaseGroup { S1aS7, S1b, S2S4, S3aS6S8, S3bS5 };

TripleCaseGroup triple_case_group(DistributionCase c);

}  // namespace parahiggs

#endif
