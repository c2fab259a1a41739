#pragma once

#include <cstdint>
#include <string>

namespace lieprop {

class Scalar;

enum class FieldKind { Rationals, PrimeField };

/// The base field: the rationals, or a prime field F_p with p < 2^31.
///
/// Prime fields exist for the exhaustive finite-field checks; the
/// structure results encoded here assume characteristic zero.
class FieldSpec {
 public:
  constexpr FieldSpec() noexcept = default;

  static constexpr FieldSpec rationals() noexcept { return FieldSpec(); }
  /// Throws BadScalar unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  constexpr FieldKind kind() const noexcept {
    return p_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField;
  }
  constexpr bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  constexpr std::uint32_t characteristic() const noexcept { return p_; }

  std::string name() const;

  friend constexpr bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }
  friend constexpr bool operator!=(FieldSpec a, FieldSpec b) noexcept { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  constexpr explicit FieldSpec(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n) noexcept;

}  // namespace lieprop
