#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tga/algebra.hpp"
#include "tga/valuation.hpp"

namespace tga {

// Isomorphism invariants of a twisted group algebra that do not presuppose
// knowledge of the underlying group. Optional fields are recorded only when
// they are honest algebra invariants for the construction at hand:
// value-group data needs an abelian group with a ramification certificate
// (otherwise the generator values only span part of the value group).
struct InvariantRecord {
  long dimension = 0;
  bool central = false;
  int regular_classes = 0;
  std::optional<std::vector<long>> value_group_factors;
  std::optional<long> abelian_exponent;
  std::optional<long> exponent_claim;
  // descriptive only; never consulted by compare_records
  std::string family_summary;
  std::optional<bool> rigidity_predicted;

  bool operator==(const InvariantRecord&) const = default;
};

InvariantRecord invariant_record(const Recipe& r);

struct ComparisonResult {
  bool distinguished = false;
  std::string by;  // name of the separating field; empty when indistinguishable
};

// Compares two records field by field in a fixed order (dimension, central,
// regular_classes, value_group_factors, abelian_exponent, exponent_claim).
// Optional fields are consulted only when present on both sides.
ComparisonResult compare_records(const InvariantRecord& a, const InvariantRecord& b);

// For two certified realizations with abelian groups over the same field the
// algebra determines the group; returns true when the groups agree. Throws
// Error("PreconditionViolated") when the hypotheses fail.
bool abelian_rigidity_same_group(const CocycleTable& ca, const GroupTable& ga,
                                 const CocycleTable& cb, const GroupTable& gb);

}  // namespace tga
