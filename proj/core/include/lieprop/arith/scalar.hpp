#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lieprop/arith/field.hpp"

namespace lieprop {

/// An exact field element: a rational in lowest terms with positive
/// denominator, or a residue in [0, p).
///
/// Arithmetic between elements of different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(mpq_class q);
  Scalar(long value, FieldSpec field);
  Scalar(const mpz_class& value, FieldSpec field);

  static Scalar zero(FieldSpec field) { return Scalar(0L, field); }
  static Scalar one(FieldSpec field) { return Scalar(1L, field); }
  /// Rational num/den; throws DivisionByZero when den == 0.
  static Scalar ratio(long num, long den);

  FieldSpec field() const noexcept;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Precondition: is_rational().
  const mpq_class& rational() const;
  /// Precondition: !is_rational().
  std::uint32_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "-3", "5/7" over Q; decimal residue over F_p.
  std::string str() const;
  /// Parses canonical text only; throws NonCanonicalScalar for e.g. "2/4",
  /// "+1", "1/1", "007" and BadScalar for malformed text.
  static Scalar parse(std::string_view text, FieldSpec field);

  /// max(|numerator|, denominator) over Q; the residue over F_p.
  mpz_class height() const;

  /// Total order used for canonical sorting (not a field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };
  explicit Scalar(Residue r) : v_(r) {}
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, FieldSpec field);
Vec unit_vec(std::size_t n, std::size_t i, FieldSpec field);
Vec int_vec(const std::vector<long>& values, FieldSpec field);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
/// Max height of the entries.
mpz_class height(const Vec& v);
std::string to_string(const Vec& v);

/// Reduction of a rational into F_p; throws BadDenominator if p divides the denominator.
Scalar reduce_mod(const Scalar& q, FieldSpec target);

}  // namespace lieprop
