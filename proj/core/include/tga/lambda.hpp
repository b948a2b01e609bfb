#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tga/group.hpp"

namespace tga {

// The three families of p-groups realizable as projective bases of division
// algebras:
//   1: abelian of symmetric type H x H
//   2: (Z_{p^n} semidirect Z_{p^n}, relation sigma pi sigma^-1 = pi^{p^s+1},
//       1 <= s < n, s != 1 when p = 2) x symmetric tail of exponent <= p^s
//   3: (Z_{2^{n+1}} semidirect (Z_{2^n} x Z_2)) x elementary-abelian tail

struct Family1Params {
  AbelianInvariants half;  // invariants of H, where G = H x H
  bool operator==(const Family1Params&) const = default;
};
struct Family2Params {
  long p = 0, n = 0, s = 0;
  AbelianInvariants tail;
  bool operator==(const Family2Params&) const = default;
};
struct Family3Params {
  long n = 0;
  long tail_pairs = 0;  // tail = (Z_2 x Z_2)^{tail_pairs}
  bool operator==(const Family3Params&) const = default;
};

struct SylowVerdict {
  long prime = 0;
  int family = 0;  // 1, 2 or 3
  std::variant<Family1Params, Family2Params, Family3Params> params;
  // abstract generator name ("pi", "sigma", "tau", "g1", ...) -> element index
  std::map<std::string, int> witness;
  // the paper never claims the (n, s) witness pattern is unique
  std::string witness_unique = "unknown";
};

struct LambdaVerdict {
  bool member = false;
  std::vector<SylowVerdict> sylows;
  // empty when member; otherwise "NotNilpotent", "CommutatorNotCyclic" or
  // "SylowNotInLambda(p): <detail>"
  std::string reason;
};

// true iff every prime power occurs with even multiplicity; returns the
// halved invariants on success.
std::pair<bool, std::optional<AbelianInvariants>> is_symmetric_type(
    const AbelianInvariants& inv);

// g must be a p-group table. Returns a verdict or a rejection reason
// ("Abelian-but-not-symmetric", "NoFamily2Witness", "NoFamily3Witness",
// "CommutatorNotCyclic"). Witness scan order is deterministic: ascending
// element indices, lexicographic tuples; the first witness wins.
std::variant<SylowVerdict, std::string> classify_p_group(const GroupTable& g, long p);

LambdaVerdict classify(const GroupTable& g);

// Theorem-6 predicate: throws Error("PreconditionViolated") unless g is a
// Lambda member. False exactly when g has a direct factor isomorphic to
// Z_4 semidirect (Z_2 x Z_2).
bool weak_rigidity_predicted(const GroupTable& g);

// Direct-factor scan for Z_4 semidirect (Z_2 x Z_2): witness search for the
// family-3 n=1 relations together with an arbitrary complement.
bool has_z4_klein_direct_factor(const GroupTable& g);

}  // namespace tga
