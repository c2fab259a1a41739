#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lieprop/arith/matrix.hpp"

namespace lieprop {

/// Dense univariate polynomial, coefficients lowest degree first with no
/// trailing zero; the zero polynomial has no coefficients.
class UPoly {
 public:
  explicit UPoly(FieldSpec field = FieldSpec::rationals()) : field_(field) {}
  UPoly(Vec coeffs, FieldSpec field);

  static UPoly from_ints(const std::vector<long>& coeffs, FieldSpec field);
  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, std::size_t degree);
  /// The variable itself.
  static UPoly x(FieldSpec field);
  /// x - r.
  static UPoly linear_root(const Scalar& r);

  FieldSpec field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  const Vec& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const;
  const Scalar& lead() const;

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  Mat eval(const Mat& m) const;
  /// Lowest index with a nonzero coefficient (the multiplicity of the root 0).
  std::size_t low_order() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& c, const UPoly& a);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "λ") const;

 private:
  void trim();
  FieldSpec field_;
  Vec c_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
bool divides(const UPoly& d, const UPoly& a);

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct Bezout {
  UPoly g;  ///< monic gcd
  UPoly s;
  UPoly t;  ///< s a + t b = g
};
Bezout xgcd(const UPoly& a, const UPoly& b);

/// base^e mod m.
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m);

bool is_squarefree(const UPoly& p);

/// Canonical ordering used to sort factor lists.
bool canonical_less(const UPoly& a, const UPoly& b);

}  // namespace lieprop
