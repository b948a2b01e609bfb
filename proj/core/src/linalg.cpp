#include "tga/linalg.hpp"

namespace tga {

std::vector<std::vector<Scalar>> linear_kernel(std::vector<std::vector<Scalar>> rows,
                                               size_t num_cols, long m, size_t n) {
  // clear denominators row by row (row scaling leaves the kernel unchanged)
  std::vector<std::vector<LaurentPoly>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != num_cols)
      fail("PreconditionViolated", "kernel input rows have inconsistent width");
    LaurentPoly scale = LaurentPoly::one(m, n);
    for (const auto& s : row) scale = scale * s.den;
    std::vector<LaurentPoly> cleared;
    cleared.reserve(num_cols);
    for (const auto& s : row) cleared.push_back(s.num * divided_exact(scale, s.den));
    a.push_back(std::move(cleared));
  }

  // fraction-free row echelon form
  const size_t num_rows = a.size();
  std::vector<size_t> pivot_col;
  LaurentPoly prev = LaurentPoly::one(m, n);
  size_t rank = 0;
  for (size_t col = 0; col < num_cols && rank < num_rows; ++col) {
    size_t piv = rank;
    while (piv < num_rows && a[piv][col].is_zero()) ++piv;
    if (piv == num_rows) continue;
    std::swap(a[rank], a[piv]);
    const LaurentPoly p = a[rank][col];
    for (size_t i = rank + 1; i < num_rows; ++i) {
      const LaurentPoly f = a[i][col];
      for (size_t j = col; j < num_cols; ++j)
        a[i][j] = divided_exact(p * a[i][j] - f * a[rank][j], prev);
    }
    prev = p;
    pivot_col.push_back(col);
    ++rank;
  }

  // back-substitution: one kernel vector per free column
  std::vector<bool> is_pivot(num_cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t f = 0; f < num_cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(num_cols, Scalar::zero(m, n));
    x[f] = Scalar::one(m, n);
    for (size_t r = rank; r-- > 0;) {
      const size_t c = pivot_col[r];
      if (c > f) continue;  // columns right of f beyond this pivot are all zero in x
      Scalar acc = Scalar::zero(m, n);
      for (size_t j = c + 1; j < num_cols; ++j)
        if (!a[r][j].is_zero() && !x[j].is_zero()) acc = acc + Scalar::of(a[r][j]) * x[j];
      x[c] = -acc / Scalar::of(a[r][c]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace tga
