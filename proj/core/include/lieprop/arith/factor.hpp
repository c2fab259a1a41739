#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieprop/arith/tristate.hpp"
#include "lieprop/arith/upoly.hpp"

namespace lieprop {

struct Factor {
  UPoly poly;  ///< monic
  unsigned multiplicity = 1;
};

/// Complete factorization over F_p into monic irreducibles (Berlekamp-free:
/// squarefree, distinct-degree, then equal-degree splitting). Sorted by
/// degree; linear factors by root ascending, others canonically.
std::vector<Factor> factor_fp(const UPoly& f);

/// Reduction of a rational polynomial into F_p; throws BadDenominator.
UPoly reduce_mod(const UPoly& f, FieldSpec target);

struct IrreducibilityOptions {
  /// Primes tried for a single-prime certificate and degree patterns.
  unsigned max_primes = 40;
};

struct Irreducibility {
  Verdict verdict = Verdict::Unknown;
  /// degree-one | finite-field | repeated-factor | rational-root | good-prime |
  /// degree-pattern | low-degree | factor-search | exhaustive-lift | exhausted
  std::string method;
  std::uint32_t prime = 0;             ///< certificate prime, when one applies
  std::vector<std::uint32_t> primes;   ///< degree-pattern primes
  std::optional<UPoly> factor;         ///< False: a monic proper factor
};

/// Throws ConstantPolynomial for constants (including zero).
Irreducibility irreducibility(const UPoly& f, const IrreducibilityOptions& opts = {});

struct Factorization {
  Scalar unit;
  std::vector<Factor> factors;  ///< sorted as in factor_fp
  /// Every listed factor is certified irreducible.
  bool complete = true;
  /// Sum of multiplicities.
  unsigned length() const;
};

/// Factorization over Q or F_p. Over Q a factor whose irreducibility stays
/// Unknown is kept whole and `complete` is cleared.
Factorization factor(const UPoly& f, const IrreducibilityOptions& opts = {});

}  // namespace lieprop
