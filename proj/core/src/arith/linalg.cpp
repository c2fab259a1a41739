#include "lieprop/arith/linalg.hpp"

#include <utility>

#include "lieprop/errors.hpp"

namespace lieprop {

RowReduction row_reduce(const Mat& m) {
  RowReduction out;
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const FieldSpec f = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  Mat ker(cols - r, cols, f);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ker(k, free) = Scalar::one(f);
    for (std::size_t i = 0; i < r; ++i) ker(k, out.pivots[i]) = -a(i, free);
    ++k;
  }
  out.echelon = std::move(a);
  out.kernel = std::move(ker);
  return out;
}

Mat row_basis(const Mat& m) {
  RowReduction rr = row_reduce(m);
  Mat b(rr.rank, m.cols(), m.field());
  for (std::size_t i = 0; i < rr.rank; ++i) b.set_row(i, rr.echelon.row(i));
  return b;
}

Mat kernel(const Mat& m) { return row_reduce(m).kernel; }

std::size_t rank(const Mat& m) { return row_reduce(m).rank; }

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw NotSquare();
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RowReduction rr = row_reduce(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw DivisionByZero();
  Mat inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.echelon(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side size mismatch");
  const std::size_t cols = m.cols();
  Mat aug(m.rows(), cols + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  RowReduction rr = row_reduce(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == cols) return std::nullopt;
  Vec x = zero_vec(cols, m.field());
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.echelon(i, cols);
  return x;
}

Mat stack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("stack: column counts differ");
  Mat s(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) s.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) s.set_row(a.rows() + i, b.row(i));
  return s;
}

Mat intersect(const Mat& a, const Mat& b) {
  // x = sum c_i a_i = sum d_j b_j  <=>  (c, -d) in ker [A; B]^T.
  const FieldSpec f = a.field();
  Mat ab = stack(a, b).transpose();
  Mat ker = kernel(ab);
  Mat pts(ker.rows(), a.cols(), f);
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec v = zero_vec(a.cols(), f);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!ker(k, i).is_zero()) v = v + ker(k, i) * a.row(i);
    pts.set_row(k, v);
  }
  return row_basis(pts);
}

Diagonalization diagonalize_symmetric(const Mat& g) {
  if (!g.is_square()) throw NotSquare();
  const std::size_t n = g.rows();
  const FieldSpec f = g.field();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i, f));
  auto form = [&](const Vec& x, const Vec& y) {
    Vec gy = g.apply(y);
    Scalar s = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) s += x[i] * gy[i];
    return s;
  };
  Vec diag;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t found = n;
    for (std::size_t i = k; i < n && found == n; ++i)
      if (!form(basis[i], basis[i]).is_zero()) found = i;
    if (found == n) {
      for (std::size_t i = k; i < n && found == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!form(basis[i], basis[j]).is_zero()) {
            basis[i] = basis[i] + basis[j];
            found = i;
            break;
          }
    }
    if (found == n) {
      for (std::size_t i = k; i < n; ++i) diag.push_back(Scalar::zero(f));
      break;
    }
    std::swap(basis[k], basis[found]);
    Scalar bkk = form(basis[k], basis[k]);
    diag.push_back(bkk);
    for (std::size_t j = k + 1; j < n; ++j) {
      Scalar c = form(basis[j], basis[k]);
      if (!c.is_zero()) basis[j] = basis[j] - (c / bkk) * basis[k];
    }
  }
  return {Mat::from_rows(basis, n, f), diag};
}

}  // namespace lieprop
