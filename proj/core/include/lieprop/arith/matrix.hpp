#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "lieprop/arith/scalar.hpp"

namespace lieprop {

/// Dense row-major matrix of Scalars over a single field.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, FieldSpec field);

  static Mat identity(std::size_t n, FieldSpec field);
  /// Each row must have `cols` entries.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, FieldSpec field);
  static Mat from_ints(const std::vector<std::vector<long>>& rows, FieldSpec field);
  static Mat diagonal(const Vec& d, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  std::vector<Vec> row_list() const;

  Mat transpose() const;
  Mat pow(std::size_t k) const;
  Scalar trace() const;
  /// Matrix-vector product.
  Vec apply(const Vec& v) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Rows as "[a, b; c, d]".
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);

}  // namespace lieprop
