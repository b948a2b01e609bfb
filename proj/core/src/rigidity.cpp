#include "tga/rigidity.hpp"

namespace tga {

InvariantRecord invariant_record(const Recipe& r) {
  InvariantRecord rec;
  const GroupTable& g = r.group.table;
  rec.dimension = g.order();
  rec.central = is_central(r.cocycle, g);
  rec.regular_classes = regular_class_count(r.cocycle, g);
  if (is_abelian(g)) {
    TtrCertificate cert = ttr_certificate(r.cocycle, g);
    if (cert.certified) {
      rec.value_group_factors = relative_value_group(r.cocycle, g).invariant_factors;
      rec.abelian_exponent = exponent_abelian_ttr(r.cocycle, g);
    }
  }
  rec.exponent_claim = r.claims.exponent_claim;
  rec.family_summary = r.claims.construction_case;
  for (const auto& b : r.claims.blocks) rec.family_summary += "; " + b;
  LambdaVerdict verdict = classify(g);
  if (verdict.member) rec.rigidity_predicted = weak_rigidity_predicted(g);
  return rec;
}

ComparisonResult compare_records(const InvariantRecord& a, const InvariantRecord& b) {
  if (a.dimension != b.dimension) return {true, "dimension"};
  if (a.central != b.central) return {true, "central"};
  if (a.regular_classes != b.regular_classes) return {true, "regular_classes"};
  if (a.value_group_factors && b.value_group_factors &&
      *a.value_group_factors != *b.value_group_factors)
    return {true, "value_group_factors"};
  if (a.abelian_exponent && b.abelian_exponent && *a.abelian_exponent != *b.abelian_exponent)
    return {true, "abelian_exponent"};
  if (a.exponent_claim && b.exponent_claim && *a.exponent_claim != *b.exponent_claim)
    return {true, "exponent_claim"};
  return {false, ""};
}

bool abelian_rigidity_same_group(const CocycleTable& ca, const GroupTable& ga,
                                 const CocycleTable& cb, const GroupTable& gb) {
  if (ca.conductor() != cb.conductor() || ca.num_indets() != cb.num_indets())
    fail("PreconditionViolated", "rigidity comparison across different fields");
  if (!armature_iso_check(ca, ga).iso || !armature_iso_check(cb, gb).iso)
    fail("PreconditionViolated", "rigidity comparison needs certified abelian armatures");
  return abelian_invariants(Subgroup::whole(ga)) == abelian_invariants(Subgroup::whole(gb));
}

}  // namespace tga
