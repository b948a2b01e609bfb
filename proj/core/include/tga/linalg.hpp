#pragma once

#include <vector>

#include "tga/laurent.hpp"

namespace tga {

// Basis of the right kernel of a matrix over Q(zeta_m)(t_1..t_N): denominators
// are cleared row by row, the polynomial matrix is triangularized by
// fraction-free (Bareiss) elimination with exact divisions, and the kernel is
// read off by back-substitution. All entries must share (m, N).
std::vector<std::vector<Scalar>> linear_kernel(std::vector<std::vector<Scalar>> rows,
                                               size_t num_cols, long m, size_t n);

}  // namespace tga
