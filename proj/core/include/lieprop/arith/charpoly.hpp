#pragma once

#include <cstddef>
#include <vector>

#include "lieprop/arith/mpoly.hpp"
#include "lieprop/arith/upoly.hpp"
#include "lieprop/errors.hpp"

namespace lieprop {

/// Division-free characteristic polynomial det(λI - A) over any commutative
/// ring R (Berkowitz). `a` is row-major n×n; the result holds n+1
/// coefficients, lowest degree first, with the leading one equal to `one`.
template <class R>
std::vector<R> berkowitz(const std::vector<R>& a, std::size_t n, const R& zero, const R& one) {
  if (a.size() != n * n) throw NotSquare();
  if (n == 0) return {one};
  auto at = [&](std::size_t i, std::size_t j) -> const R& { return a[i * n + j]; };

  // vect: coefficients of the characteristic polynomial of the leading r×r
  // block, highest degree first.
  std::vector<R> vect{one, zero - at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<R> q(r + 2, zero);
    q[0] = one;
    q[1] = zero - at(r, r);
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot += at(r, i) * v[i];
      q[k + 2] = zero - dot;
      if (k + 1 < r) {
        std::vector<R> w(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += at(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<R> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= r && j <= i; ++j) next[i] += q[i - j] * vect[j];
    vect = std::move(next);
  }
  return std::vector<R>(vect.rbegin(), vect.rend());
}

UPoly charpoly(const Mat& m);

/// Coefficients c_0..c_n of det(λI - M) for a matrix of polynomials.
std::vector<MPoly> charpoly(const std::vector<MPoly>& entries, std::size_t n);

struct MinimalPolynomial {
  UPoly poly;
  bool squarefree = false;
};

/// Monic minimal polynomial via the first linear dependency among I, M, M², ...
MinimalPolynomial minpoly(const Mat& m);

}  // namespace lieprop
