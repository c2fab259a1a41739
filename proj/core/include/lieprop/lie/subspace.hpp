#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "lieprop/arith/matrix.hpp"

namespace lieprop {

/// A subspace of K^n held by its reduced row-echelon basis, so equal
/// subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^n.
  Subspace(std::size_t ambient_dim, FieldSpec field);

  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim, FieldSpec field);
  static Subspace row_space(const Mat& m);
  static Subspace whole(std::size_t ambient_dim, FieldSpec field);

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  FieldSpec field() const noexcept { return basis_.field(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim(); }

  const Mat& basis() const noexcept { return basis_; }
  std::vector<Vec> vectors() const { return basis_.row_list(); }
  Vec vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Columns without a pivot; the matching unit vectors span a complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// Coordinates of v in this basis; precondition contains(v).
  Vec coordinates(const Vec& v) const;
  /// v minus its component along this subspace w.r.t. the free-column complement.
  Vec reduce(const Vec& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  /// Canonical order: by dimension, then pivot sequence, then basis entries.
  friend bool canonical_less(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Mat echelon_basis);
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// "span{...}" over the echelon basis.
std::ostream& operator<<(std::ostream& os, const Subspace& s);

/// Some nonzero vector of `s` outside `t`, or the empty Vec if s ⊆ t.
Vec vector_outside(const Subspace& s, const Subspace& t);

}  // namespace lieprop
