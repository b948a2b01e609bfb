#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/lambda.hpp"
#include "tga/presentation.hpp"

namespace tga {

// A 2-cocycle on a finite group with values in the monomial subgroup of
// Q(zeta_m)(t_1..t_N)^x, tabulated as alpha(g, h) for all pairs.
class CocycleTable {
 public:
  CocycleTable(long m, size_t n, int order)
      : m_(m), n_(n), order_(order),
        a_(static_cast<size_t>(order) * order, Monomial::one(m, n)) {}

  long conductor() const { return m_; }
  size_t num_indets() const { return n_; }
  int order() const { return order_; }

  const Monomial& alpha(int g, int h) const {
    return a_[static_cast<size_t>(g) * order_ + h];
  }
  void set(int g, int h, Monomial v) {
    a_[static_cast<size_t>(g) * order_ + h] = std::move(v);
  }

  bool operator==(const CocycleTable&) const = default;

 private:
  long m_;
  size_t n_;
  int order_;
  std::vector<Monomial> a_;
};

struct CocycleCheck {
  bool ok = true;
  std::string detail;  // names a violating pair or triple on failure
};

// Normalization (alpha(1,.) = alpha(.,1) = 1) and the full associativity
// identity alpha(g,h) alpha(gh,l) = alpha(h,l) alpha(g,hl) over all triples.
CocycleCheck verify_cocycle(const CocycleTable& c, const GroupTable& g);

// Build the group and the cocycle from a twisted presentation: basis elements
// are the normal forms, and alpha(g, h) is the monomial prefix accumulated by
// collecting (word of g)(word of h).
std::pair<PcGroup, CocycleTable> cocycle_from_presentation(const MonomialPcPresentation& p);

struct RealizationClaims {
  // "symbol" (one abelian Sylow), "I" (family-2 core), "II" (family-3 core),
  // "IV" (several primes), "trivial"
  std::string construction_case;
  // claimed exponent of the constructed division algebra; absent when some
  // block carries no claim
  std::optional<long> exponent_claim;
  std::vector<std::string> blocks;  // human-readable block summaries

  bool operator==(const RealizationClaims&) const = default;
};

struct Recipe {
  MonomialPcPresentation pres;
  PcGroup group;        // built from pres.base
  CocycleTable cocycle;
  RealizationClaims claims;
};

// Explicit division-algebra realization of a Lambda member: one generator
// block per Sylow verdict, disjoint indeterminates, conductor the lcm of the
// block root orders. Throws Error("PreconditionViolated") for non-members.
Recipe realize(const LambdaVerdict& verdict);

}  // namespace tga
