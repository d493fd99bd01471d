#ifndef PARAHIGGS_VERIFY_HPP
#define PARAHIGGS_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parahiggs/weights.hpp"

namespace parahiggs {

/// Grid selection for the cross-path reconciliation run. Defaults cover
/// g in {1,2,3}, every (a,b) with |a|,|b| <= 3 and a+b in {-3,0,3}, and
/// one representative weight point per classifiable chamber.
struct VerifyOptions {
  std::vector<long long> genus = {1, 2, 3};
  std::vector<long long> deltas = {-3, 0, 3};
  /// When set, replaces the (a,b) pairs derived from deltas.
  std::optional<std::vector<std::pair<long long, long long>>> degree_pairs;
  /// Empty means all ten chamber labels.
  std::vector<DistributionCase> cases;
  /// Test fixture: perturbs one chamber's closed expression so the
  /// harness itself can be checked to catch disagreements.
  bool corrupt_closed_table = false;
};

struct VerifyFailure {
  std::string check;       // which comparison or property failed
  std::string input_desc;  // the offending input
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  long long inputs_checked = 0;
  long long inputs_skipped = 0;  // grid combinations with tau >= 0
  long long property_checks = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// One representative point per chamber label, usable across the grid.
WeightPoint representative_point(DistributionCase c);

/// Runs the reconciliation suite (direct vs closed on both stratum types),
/// the structural invariants, the dualization round trip, and the
/// symmetric-product property block.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace parahiggs

#endif
