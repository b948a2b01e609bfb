#pragma once

#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/lattice.hpp"
#include "tga/laurent.hpp"

namespace tga {

// Value in the totally ordered group Q^N, ordered right-to-left
// lexicographically (the last differing coordinate decides).
using ValueVector = std::vector<Rat>;

int compare_values(const ValueVector& a, const ValueVector& b);  // -1 / 0 / 1

ValueVector monomial_value(const Monomial& m);

// min over terms of the exponent vector (right-to-left lex); Error("ValueOfZero")
// on the zero polynomial.
ValueVector laurent_value(const LaurentPoly& p);
ValueVector scalar_value(const Scalar& s);  // v(num) - v(den)

// v(u_g) = (1/e) v(m_g) where e = ord(g) and u_g^e = m_g (a monomial).
ValueVector generator_value(const CocycleTable& c, const GroupTable& g, int x);

struct ValueGroupResult {
  std::vector<long> invariant_factors;  // of the quotient lattice, each > 1
  long order = 1;
};

// The quotient of the lattice generated by Z^N and all v(u_g) by Z^N.
ValueGroupResult relative_value_group(const CocycleTable& c, const GroupTable& g);

struct TtrCertificate {
  bool certified = false;
  long value_group_index = 1;
  long degree = 1;  // dimension of the twisted algebra over the rational function field
  std::string detail;  // names a witness element on failure
};

// Total ramification certificate: the index of the relative value group must
// equal the algebra dimension (the residue field has characteristic zero, so
// this certifies a division algebra).
TtrCertificate ttr_certificate(const CocycleTable& c, const GroupTable& g);

struct ArmatureCheck {
  bool iso = false;
  std::string detail;  // why not, when iso is false
};

// For abelian G the map g -> v(u_g) + Z^N is a homomorphism into the relative
// value group; it is an isomorphism iff it is injective and the primary
// invariants agree (which certifies total ramification). Failures are
// reported, not thrown. Throws Error("PreconditionViolated") for nonabelian G.
ArmatureCheck armature_iso_check(const CocycleTable& c, const GroupTable& g);

// Largest invariant factor of the relative value group (1 when trivial).
long exponent_abelian_ttr(const CocycleTable& c, const GroupTable& g);

}  // namespace tga
