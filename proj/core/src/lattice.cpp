#include "tga/lattice.hpp"

#include <algorithm>

#include "tga/error.hpp"

namespace tga {

IntMat identity_matrix(int n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat hnf_column_basis(const IntMat& A) {
  const int rows = static_cast<int>(A.size());
  IntMat w = A;  // work on a copy; column operations only
  int cols = rows ? static_cast<int>(w[0].size()) : 0;

  auto col_addmul = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < rows; ++r) w[r][dst] += q * w[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(w[r][a], w[r][b]);
  };

  int p = 0;  // next pivot column
  for (int r = 0; r < rows && p < cols; ++r) {
    // gcd-out row r across columns p..cols-1
    while (true) {
      int jmin = -1;
      for (int j = p; j < cols; ++j) {
        if (w[r][j] != 0 && (jmin < 0 || abs(w[r][j]) < abs(w[r][jmin]))) jmin = j;
      }
      if (jmin < 0) break;  // row r already clear; no pivot in this row
      if (jmin != p) col_swap(p, jmin);
      bool reduced_all = true;
      for (int j = p + 1; j < cols; ++j) {
        if (w[r][j] == 0) continue;
        Int q = w[r][j] / w[r][p];  // truncated division
        col_addmul(j, p, -q);
        if (w[r][j] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (w[r][p] != 0) {
      if (w[r][p] < 0)
        for (int rr = 0; rr < rows; ++rr) w[rr][p] = -w[rr][p];
      ++p;
    }
  }

  IntMat basis(rows, std::vector<Int>(p, 0));
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < p; ++j) basis[r][j] = w[r][j];
  return basis;
}

SmithResult smith_normal_form(IntMat A, bool track_left) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  IntMat uinv = track_left ? identity_matrix(rows) : IntMat{};

  auto row_swap = [&](int a, int b) {
    std::swap(A[a], A[b]);
    if (track_left)
      for (int i = 0; i < rows; ++i) std::swap(uinv[i][a], uinv[i][b]);
  };
  // row b += q * row a;  U^{-1}: col a -= q * col b
  auto row_addmul = [&](int b, int a, const Int& q) {
    for (int j = 0; j < cols; ++j) A[b][j] += q * A[a][j];
    if (track_left)
      for (int i = 0; i < rows; ++i) uinv[i][a] -= q * uinv[i][b];
  };
  auto row_negate = [&](int a) {
    for (int j = 0; j < cols; ++j) A[a][j] = -A[a][j];
    if (track_left)
      for (int i = 0; i < rows; ++i) uinv[i][a] = -uinv[i][a];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(A[i][a], A[i][b]);
  };
  auto col_addmul = [&](int b, int a, const Int& q) {
    for (int i = 0; i < rows; ++i) A[i][b] += q * A[i][a];
  };

  const int nd = std::min(rows, cols);
  for (int t = 0; t < nd; ++t) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (A[i][j] != 0 &&
            (pr < 0 || abs(A[i][j]) < abs(A[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    if (pr != t) row_swap(t, pr);
    if (pc != t) col_swap(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (A[i][t] == 0) continue;
        Int q = A[i][t] / A[t][t];
        row_addmul(i, t, -q);
        if (A[i][t] != 0) {
          row_swap(t, i);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (A[t][j] == 0) continue;
        Int q = A[t][j] / A[t][t];
        col_addmul(j, t, -q);
        if (A[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (A[i][j] % A[t][t] != 0) {
              row_addmul(t, i, 1);
              clean = false;
            }
      }
    }
    if (A[t][t] < 0) row_negate(t);
  }

  SmithResult res;
  res.diag.resize(nd);
  for (int t = 0; t < nd; ++t) res.diag[t] = A[t][t];
  res.left_inverse = std::move(uinv);
  return res;
}

IntMat solve_integer(const IntMat& B, const IntMat& C) {
  const int n = static_cast<int>(B.size());
  const int m = n ? static_cast<int>(C[0].size()) : 0;
  // fraction-free Gaussian elimination on [B | C] over Q, then integrality check
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(B[i][j]);
    for (int j = 0; j < m; ++j) w[i][n + j] = Rat(C[i][j]);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (w[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) fail("Internal", "singular matrix in solve_integer");
    std::swap(w[c], w[p]);
    for (int r = 0; r < n; ++r) {
      if (r == c || w[r][c] == 0) continue;
      Rat f = w[r][c] / w[c][c];
      for (int j = c; j < n + m; ++j) w[r][j] -= f * w[c][j];
    }
  }
  IntMat X(n, std::vector<Int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Rat x = w[i][n + j] / w[i][i];
      x.canonicalize();
      if (x.get_den() != 1) fail("Internal", "non-integral solution in solve_integer");
      X[i][j] = x.get_num();
    }
  return X;
}

}  // namespace tga
