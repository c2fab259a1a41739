#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lieprop/arith/scalar.hpp"

namespace lieprop {

/// Sparse multivariate polynomial with exact coefficients.
///
/// Exponent vectors are packed four bits per variable, so at most 16
/// variables with per-variable degree at most 15; products that would
/// overflow throw DimensionMismatch. No zero coefficient is ever stored,
/// hence the zero polynomial is exactly the empty term list.
class MPoly {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr unsigned kMaxExponent = 15;

  MPoly() = default;
  MPoly(std::size_t nvars, FieldSpec field);

  static MPoly constant(std::size_t nvars, const Scalar& c);
  /// The variable t_i (0-based index).
  static MPoly variable(std::size_t nvars, std::size_t i, FieldSpec field);

  std::size_t nvars() const noexcept { return nvars_; }
  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  unsigned total_degree() const;

  /// Terms as (exponent vector, coefficient), in packed-key order.
  std::vector<std::pair<std::vector<unsigned>, Scalar>> terms() const;
  Scalar coefficient(const std::vector<unsigned>& exponents) const;
  Scalar eval(const Vec& point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Scalar& c, const MPoly& a);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Graded rendering with variables t1..tn, e.g. "-4*t2^2 - 4*t1*t3".
  std::string str() const;

 private:
  using Term = std::pair<std::uint64_t, Scalar>;
  void check_compatible(const MPoly& o) const;
  MPoly& merge(const MPoly& o, bool subtract);

  std::size_t nvars_ = 0;
  FieldSpec field_;
  std::vector<Term> terms_;  // sorted by key, nonzero coefficients only
};

}  // namespace lieprop
