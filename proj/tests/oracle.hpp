#pragma once

// Naive dense rational Gaussian elimination, kept deliberately independent
// of the sparse fraction-free path in sqck::linalg so it can serve as a
// cross-check oracle.

#include <vector>

#include "sqck/linalg.hpp"
#include "sqck/rational.hpp"

namespace oracle {

using sqck::Rational;

using DenseMatrix = std::vector<std::vector<Rational>>;

inline DenseMatrix to_dense(const sqck::SparseRationalMatrix& m) {
  DenseMatrix d(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d[r][c] = v;
  return d;
}

inline int dense_rank(DenseMatrix a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rk], a[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rk || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[rk][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
    }
    ++rk;
  }
  return rk;
}

}  // namespace oracle
