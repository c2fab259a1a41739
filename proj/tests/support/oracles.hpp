// Independent reference computations for tests. Everything here is
// deliberately naive: cofactor expansion, exhaustive enumeration, direct
// evaluation of defining formulas.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "lieprop/arith/matrix.hpp"
#include "lieprop/arith/upoly.hpp"

namespace oracle {

using lieprop::FieldSpec;
using lieprop::Mat;
using lieprop::Scalar;
using lieprop::UPoly;
using lieprop::Vec;

/// Determinant by Laplace expansion along the first row.
inline Scalar det_cofactor(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  if (n == 1) return m(0, 0);
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1, m.field());
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Scalar term = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// det(λI - m) at a specific λ.
inline Scalar charpoly_at(const Mat& m, const Scalar& lambda) {
  Mat shifted = lambda * Mat::identity(m.rows(), m.field()) - m;
  return det_cofactor(shifted);
}

/// All monic polynomials of exact degree d over F_p.
inline std::vector<UPoly> monic_polys(std::uint32_t p, int d) {
  const FieldSpec f = FieldSpec::prime(p);
  std::vector<UPoly> out;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    Vec c;
    std::size_t rest = code;
    for (int i = 0; i < d; ++i) {
      c.emplace_back(static_cast<long>(rest % p), f);
      rest /= p;
    }
    c.push_back(Scalar::one(f));
    out.emplace_back(c, f);
  }
  return out;
}

/// Irreducible over F_p by trial division by every monic polynomial of degree ≤ deg/2.
inline bool irreducible_by_enumeration(const UPoly& f) {
  const std::uint32_t p = f.field().characteristic();
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : monic_polys(p, d))
      if (lieprop::divides(g, f)) return false;
  return f.degree() >= 1;
}

/// Deterministic 64-bit generator (splitmix64) for hand-rolled property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

inline Mat random_int_mat(Rng& rng, std::size_t rows, std::size_t cols, long bound, FieldSpec f) {
  Mat m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = Scalar(rng.range(-bound, bound), f);
    }
  return m;
}

}  // namespace oracle

#include "lieprop/lie/algebra.hpp"

namespace oracle {

/// Dense antisymmetric tensor c[i][j][k] from raw records, then the Jacobi
/// sum written out coordinate by coordinate. Returns the failing triples.
inline std::vector<std::array<std::size_t, 3>> jacobi_failures(
    std::size_t n, FieldSpec f, const std::vector<lieprop::BracketEntry>& entries) {
  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * n + j) * n + k]; };
  for (const auto& e : entries)
    for (std::size_t k = 0; k < n; ++k) {
      at(e.i, e.j, k) = e.value[k];
      at(e.j, e.i, k) = -e.value[k];
    }
  std::vector<std::array<std::size_t, 3>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Scalar s = Scalar::zero(f);
          for (std::size_t l = 0; l < n; ++l)
            s += at(j, k, l) * at(i, l, m) + at(k, i, l) * at(j, l, m) + at(i, j, l) * at(k, l, m);
          if (!s.is_zero()) {
            bad.push_back({i, j, k});
            break;
          }
        }
  return bad;
}

/// [x, y] from the dense definition Σ x_i y_j [e_i, e_j].
inline Vec bracket(const lieprop::LieAlgebra& L, const Vec& x, const Vec& y) {
  Vec out = lieprop::zero_vec(L.dim(), L.field());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) out = out + (x[i] * y[j]) * L.basis_bracket(i, j);
  return out;
}

inline Vec random_vec(Rng& rng, std::size_t n, long bound, FieldSpec f) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.range(-bound, bound), f);
  return v;
}

/// Every vector of F_p^n, coordinate 0 least significant.
inline std::vector<Vec> all_vectors(std::size_t n, std::uint32_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vec> out;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v;
    for (std::size_t i = 0, c = code; i < n; ++i, c /= p) v.emplace_back(static_cast<long>(c % p), f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Subspaces of a tiny F_p^n as the subsets of vectors that contain 0 and
/// are closed under addition (which also gives scalar multiples over F_p).
inline std::vector<std::vector<Vec>> subspaces_by_subsets(std::size_t n, std::uint32_t p) {
  const std::vector<Vec> vecs = all_vectors(n, p);
  std::vector<std::vector<Vec>> out;
  const std::size_t m = vecs.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); mask += 2) {  // bit 0 is the zero vector
    std::vector<Vec> members;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) members.push_back(vecs[k]);
    bool closed = true;
    for (std::size_t a = 0; a < members.size() && closed; ++a)
      for (std::size_t b = a; b < members.size() && closed; ++b)
        closed = std::find(members.begin(), members.end(), members[a] + members[b]) != members.end();
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace oracle
