#pragma once

#include <vector>

#include "tga/cocycle.hpp"
#include "tga/linalg.hpp"

namespace tga {

// An element of the twisted group algebra: one scalar coefficient per basis
// element u_g.
using AlgebraElement = std::vector<Scalar>;

AlgebraElement algebra_zero(const CocycleTable& c);
AlgebraElement algebra_basis_element(const CocycleTable& c, int g);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
// u_g u_h = alpha(g,h) u_{gh}, extended bilinearly
AlgebraElement multiply(const CocycleTable& c, const GroupTable& g, const AlgebraElement& a,
                        const AlgebraElement& b);

// alpha(g,h) / alpha(h,g) for commuting g, h; throws Error("NotCommuting").
Monomial commutator_pairing(const CocycleTable& c, const GroupTable& g, int x, int y);

// x is regular when the pairing with every element of its centralizer is 1.
bool is_regular(const CocycleTable& c, const GroupTable& g, int x);

// Number of conjugacy classes consisting of regular elements. Regularity is
// constant on classes; this checks every member and throws Error("Internal")
// on disagreement.
int regular_class_count(const CocycleTable& c, const GroupTable& g);

// Basis of the center of the twisted group algebra, each vector giving the
// basis-element coefficients (exact linear algebra over the scalar field).
std::vector<std::vector<Scalar>> center_basis(const CocycleTable& c, const GroupTable& g);

// True when the center is the ground field, decided by the regular-class
// count; cross-checked against center_basis for groups of order <= cross_check_cap
// and throws Error("CentralityMismatch") if the two disagree.
bool is_central(const CocycleTable& c, const GroupTable& g, int cross_check_cap = 32);

}  // namespace tga
