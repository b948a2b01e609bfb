#pragma once

#include <utility>
#include <vector>

#include "tga/error.hpp"
#include "tga/numeric.hpp"

namespace tga {

// A finite group given by its full multiplication table. Element 0 is the
// identity; tables with the identity elsewhere are rejected, not relabeled.
class GroupTable {
 public:
  // Full validation: identity at 0, Latin square, associativity, inverses.
  // Throws Error with codes NoIdentityAtZero / NotLatinSquare / NotAssociative.
  static GroupTable validate(const std::vector<std::vector<int>>& mul);

  // For internally constructed tables whose group laws hold by construction.
  static GroupTable trusted(int order, std::vector<int> flat);

  int order() const { return n_; }
  int mul(int a, int b) const { return t_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int g, long e) const;
  // h g h^{-1}
  int conj(int g, int h) const { return mul(mul(h, g), inv(h)); }

  bool operator==(const GroupTable&) const = default;

 private:
  GroupTable(int n, std::vector<int> flat);
  void compute_inverses();

  int n_ = 1;
  std::vector<int> t_;
  std::vector<int> inv_;
};

class Subgroup {
 public:
  static Subgroup whole(const GroupTable& g);
  static Subgroup trivial(const GroupTable& g);
  // Checks closure, identity, inverses; throws Error("NotASubgroup", ...).
  static Subgroup from_elements(const GroupTable& g, std::vector<int> elems);
  static Subgroup generated(const GroupTable& g, const std::vector<int>& gens);

  const GroupTable& parent() const { return *parent_; }
  const std::vector<int>& elements() const { return elems_; }  // sorted
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }

 private:
  Subgroup(const GroupTable& g, std::vector<int> elems);

  const GroupTable* parent_;
  std::vector<int> elems_;
};

// Primary decomposition of a finite abelian group: multiset of prime powers.
struct AbelianInvariants {
  std::vector<long> primary;  // sorted ascending, each a prime power > 1

  long group_order() const {
    long o = 1;
    for (long q : primary) o *= q;
    return o;
  }
  bool operator==(const AbelianInvariants&) const = default;
};

long element_order(const GroupTable& g, int x);
bool is_abelian(const GroupTable& g);
bool is_abelian(const Subgroup& s);
bool is_cyclic(const Subgroup& s);
bool is_normal(const Subgroup& s);

Subgroup center(const GroupTable& g);
Subgroup commutator_subgroup(const GroupTable& g);
Subgroup centralizer(const GroupTable& g, int x);
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);

// Componentwise product; element (a, b) gets index a * |h| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// For each prime p | |G| the set of p-elements, which must be closed under
// multiplication (this characterizes nilpotency on tables). Throws
// Error("NotNilpotent", ...) naming a prime and a violating pair.
std::vector<std::pair<long, Subgroup>> sylow_decomposition(const GroupTable& g);

// Throws Error("NotAbelian", ...) when s is not abelian.
AbelianInvariants abelian_invariants(const Subgroup& s);

// Independent generators of an abelian subgroup: (element, order) pairs with
// orders in invariant-factor form d_1 | d_2 | ... and s = product of <b_i>.
std::vector<std::pair<int, long>> abelian_basis(const Subgroup& s);

std::vector<long> invariant_factor_form(const AbelianInvariants& inv);
AbelianInvariants primary_form(const std::vector<long>& invariant_factors);

// The subgroup as a standalone table (local identity 0) plus the map from
// local indices to parent indices.
std::pair<GroupTable, std::vector<int>> subgroup_table(const Subgroup& s);

// Greedy generating set, deterministic (ascending element scan).
std::vector<int> small_generating_set(const GroupTable& g);

}  // namespace tga
