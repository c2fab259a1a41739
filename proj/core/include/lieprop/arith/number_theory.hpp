#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "lieprop/arith/upoly.hpp"

namespace lieprop {

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Scales a rational polynomial to a primitive integer one with positive
/// leading coefficient; returns the integer coefficients, lowest first.
std::vector<mpz_class> primitive_integer_coeffs(const UPoly& p);

/// All rational roots of a nonzero polynomial over Q, each once, ordered by
/// height, then magnitude, positive before negative.
std::vector<mpq_class> rational_roots(const UPoly& p);

}  // namespace lieprop
