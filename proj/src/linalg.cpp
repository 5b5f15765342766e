#include "normlab/linalg.hpp"

namespace normlab {

Rational determinant(RationalMatrix const& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  RationalMatrix m = input;
  Eigen::Index const n = m.rows();
  Rational det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (m(row, col) == 0) continue;
      Rational const factor = m(row, col) / m(col, col);
      for (Eigen::Index j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(RationalMatrix const& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  }
  Eigen::Index const n = input.rows();
  RationalMatrix m = input;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rational const scale = 1 / m(col, col);
    m.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || m(row, col) == 0) continue;
      Rational const factor = m(row, col);
      m.row(row) -= factor * m.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

}  // namespace normlab
