#pragma once

#include <vector>

#include "tga/numeric.hpp"

namespace tga {

// Row-major integer matrix.
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(int n);

// Basis of the lattice spanned by the columns of A (k rows), as the columns
// of a k x r column-echelon matrix (r = rank). No modular shortcuts.
IntMat hnf_column_basis(const IntMat& A);

struct SmithResult {
  std::vector<Int> diag;  // d_1 | d_2 | ... (nonnegative), length min(rows, cols)
  IntMat left_inverse;    // U^{-1} where U A V = D; empty unless requested
};

// Smith normal form over Z. When track_left is set, returns U^{-1} for the
// unimodular row transform (columns of U^{-1} express the adapted basis of
// Z^rows in terms of the original one).
SmithResult smith_normal_form(IntMat A, bool track_left = false);

// Solve B X = C for X over the integers, B square nonsingular; throws
// Error("Internal") if the solution is not integral.
IntMat solve_integer(const IntMat& B, const IntMat& C);

}  // namespace tga
