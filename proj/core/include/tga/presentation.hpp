#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tga/group.hpp"
#include "tga/monomial.hpp"

namespace tga {

struct GenPower {
  int gen;   // 0-based generator index
  long exp;  // >= 1
  bool operator==(const GenPower&) const = default;
};
using Word = std::vector<GenPower>;

// Polycyclic presentation with generators x_1 < x_2 < ... < x_r and normal
// forms x_1^{a_1} ... x_r^{a_r}, 0 <= a_i < o_i.
//
//   x_i^{o_i}        = power_words[i]          (word in generators > i)
//   x_j x_i x_j^{-1} = conjugates[(j,i)], j>i  (word in generators >= i;
//                                               absent means x_j, x_i commute)
struct PcPresentation {
  std::vector<long> relative_orders;
  std::vector<Word> power_words;                  // size r (empty word = identity)
  std::map<std::pair<int, int>, Word> conjugates; // key (j, i) with j > i

  int num_gens() const { return static_cast<int>(relative_orders.size()); }
};

// Twisted variant: each relation additionally carries a monomial prefix.
//   x_i^{o_i}        = power_values[i] * power_words[i]
//   x_j x_i x_j^{-1} = conj_values[(j,i)] * conjugates[(j,i)]
// Projecting all monomials to 1 recovers the base presentation.
struct MonomialPcPresentation {
  PcPresentation base;
  long conductor = 1;
  size_t num_indets = 0;
  std::vector<Monomial> power_values;
  std::map<std::pair<int, int>, Monomial> conj_values;

  static MonomialPcPresentation untwisted(const PcPresentation& p);
};

// The constructed group plus the normal-form bookkeeping retained from
// collection (mixed-radix indexing of exponent tuples; identity is index 0).
struct PcGroup {
  GroupTable table;
  PcPresentation pres;
  std::vector<long> strides;

  long index_of(const std::vector<long>& exps) const;
  std::vector<long> exps_of(long idx) const;
  std::vector<int> letters_of(long idx) const;  // representative word
  int generator_element(int i) const;           // table index of x_i
};

// Builds the multiplication table by collection to normal form; validates the
// result and throws Error("InconsistentPresentation") on failure.
PcGroup group_from_presentation(const PcPresentation& p);

// --- collection engine (shared by group and cocycle construction) ---

struct CollectionRules {
  long conductor = 1;
  size_t num_indets = 0;
  std::vector<long> orders;
  // x_i^{o_i} -> value * letters
  std::vector<std::pair<Monomial, std::vector<int>>> powers;
  // x_j x_i -> value * letters * x_j   (j > i; letters use generators >= i)
  std::map<std::pair<int, int>, std::pair<Monomial, std::vector<int>>> swaps;
  size_t step_cap = 2'000'000;

  static CollectionRules from(const MonomialPcPresentation& p);
};

struct Collected {
  Monomial coeff;
  std::vector<long> exps;  // normal-form exponents
};

// Collection from the left: repeatedly rewrites the leftmost violation
// (descending adjacent pair, or a completed run of o_i equal letters).
Collected collect(const CollectionRules& rules, std::vector<int> letters);

// Reference rewriter used as a cross-check: same rules, but always rewrites
// the rightmost violation. Confluence of a consistent presentation makes the
// two agree.
Collected collect_rightmost(const CollectionRules& rules, std::vector<int> letters);

}  // namespace tga
