#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieprop/arith/matrix.hpp"
#include "lieprop/errors.hpp"

namespace lieprop {

/// One nonzero structure-constant record: [e_i, e_j] = value, with i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec value;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// A basis triple (i < j < k) whose Jacobiator
/// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] is `residual` != 0.
struct JacobiTriple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vec residual;
};

class JacobiViolation : public Error {
 public:
  explicit JacobiViolation(std::vector<JacobiTriple> triples);
  const std::vector<JacobiTriple>& triples() const noexcept { return triples_; }

 private:
  std::vector<JacobiTriple> triples_;
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets with i < j are stored; the rest follow by antisymmetry.
/// Instances always satisfy the Jacobi identity: the only way to build one
/// is through validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws IndexOutOfRange, DimensionMismatch, FieldMismatch,
  /// BadScalar (duplicate pair) or JacobiViolation listing every bad triple.
  static LieAlgebra validate(std::size_t dim, FieldSpec field, std::vector<BracketEntry> brackets,
                             std::vector<std::string> labels = {});
  static LieAlgebra abelian(std::size_t dim, FieldSpec field);

  std::size_t dim() const noexcept { return dim_; }
  FieldSpec field() const noexcept { return field_; }
  /// Explicit labels, or "e0".."e{n-1}".
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_custom_labels() const noexcept { return custom_labels_; }
  /// Nonzero entries sorted by (i, j).
  const std::vector<BracketEntry>& brackets() const noexcept { return brackets_; }

  /// [e_i, e_j] for any i, j.
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Column j is [x, e_j].
  Mat ad(const Vec& x) const;
  const Mat& ad_basis(std::size_t i) const { return ad_.at(i); }
  bool is_abelian() const noexcept { return brackets_.empty(); }

  Vec zero() const { return zero_vec(dim_, field_); }
  Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i, field_); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.brackets_ == b.brackets_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<BracketEntry> brackets_;
  std::vector<std::string> labels_;
  bool custom_labels_ = false;
  std::vector<Mat> ad_;
};

/// Jacobiators of every basis triple with nonzero residual, computed straight
/// from the raw table (no antisymmetry or validity assumed beyond i < j).
std::vector<JacobiTriple> jacobi_residuals(std::size_t dim, FieldSpec field,
                                           const std::vector<BracketEntry>& brackets);

}  // namespace lieprop
