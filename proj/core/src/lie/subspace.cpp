#include "lieprop/lie/subspace.hpp"

#include <ostream>

#include "lieprop/arith/linalg.hpp"
#include "lieprop/errors.hpp"

namespace lieprop {

Subspace::Subspace(std::size_t ambient_dim, FieldSpec field) : basis_(0, ambient_dim, field) {}

Subspace::Subspace(Mat echelon_basis) : basis_(std::move(echelon_basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c).is_zero()) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::row_space(const Mat& m) { return Subspace(row_basis(m)); }

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim, FieldSpec field) {
  if (vectors.empty()) return Subspace(ambient_dim, field);
  return row_space(Mat::from_rows(vectors, ambient_dim, field));
}

Subspace Subspace::whole(std::size_t ambient_dim, FieldSpec field) {
  return Subspace(Mat::identity(ambient_dim, field));
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length differs from ambient dimension");
  Vec out = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim(); ++k)
      if (!basis_(r, k).is_zero()) out[k] -= c * basis_(r, k);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return lieprop::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!contains(s.vector(r))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw DimensionMismatch("vector is not in the subspace");
  Vec out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(v[pivots_[r]]);
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace::row_space(stack(a.basis_, b.basis_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim(), a.field());
  return Subspace::row_space(intersect(a.basis_, b.basis_));
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c)
      if (a.basis_(r, c) != b.basis_(r, c)) return canonical_less(a.basis_(r, c), b.basis_(r, c));
  return false;
}

Vec vector_outside(const Subspace& s, const Subspace& t) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!t.contains(s.vector(r))) return s.vector(r);
  return {};
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  for (std::size_t k = 0; k < s.dim(); ++k) os << (k ? ", " : "") << to_string(s.vector(k));
  return os << "}";
}

}  // namespace lieprop
