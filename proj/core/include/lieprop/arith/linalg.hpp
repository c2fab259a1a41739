#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieprop/arith/matrix.hpp"

namespace lieprop {

struct RowReduction {
  Mat echelon;  ///< unique reduced row-echelon form, same shape as the input
  std::size_t rank = 0;
  Mat kernel;   ///< rows span {x : m x = 0}; rank + kernel.rows() == cols
  std::vector<std::size_t> pivots;
};

RowReduction row_reduce(const Mat& m);

/// Nonzero rows of the reduced echelon form: the canonical basis of the row space.
Mat row_basis(const Mat& m);
Mat kernel(const Mat& m);
std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);
/// Throws DivisionByZero when singular.
Mat inverse(const Mat& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Stack the rows of a and b (same column count).
Mat stack(const Mat& a, const Mat& b);
/// Canonical basis of rowspace(a) ∩ rowspace(b).
Mat intersect(const Mat& a, const Mat& b);

/// Congruence diagonalization of a symmetric matrix in characteristic != 2:
/// returns (P, d) with P^T G P = diag(d). Rows of P^T are the new basis.
struct Diagonalization {
  Mat basis;  ///< rows are the new basis vectors
  Vec diagonal;
};
Diagonalization diagonalize_symmetric(const Mat& g);

}  // namespace lieprop
