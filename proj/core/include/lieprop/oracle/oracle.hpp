#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "lieprop/arith/matrix.hpp"
#include "lieprop/lie/algebra.hpp"
#include "lieprop/lie/subspace.hpp"

namespace lieprop {

struct OracleOptions {
  double subspace_guard = 1e5;  ///< bound on the Gaussian-binomial subspace count
  double element_guard = 1e6;   ///< bound on p^n for element enumeration
};

/// Entry-wise reduction of a rational algebra into F_p, re-validated.
/// Throws BadDenominator.
LieAlgebra reduce_mod_p(const LieAlgebra& L, std::uint32_t p);

/// Basis triples (i < j < k) where the Jacobi sum of a raw bracket table is
/// nonzero, from a dense antisymmetric tensor. Does not need the table to be valid.
std::vector<std::array<std::size_t, 3>> jacobi_bruteforce(std::size_t n, FieldSpec f,
                                                          const std::vector<BracketEntry>& entries);

/// Number of subspaces of F_p^n (sum of Gaussian binomials).
double subspace_count(std::size_t n, std::uint32_t p);

struct SubalgebraEnumeration {
  LieAlgebra algebra;
  std::vector<Subspace> subalgebras;  ///< sorted by (dim, canonical basis)
  std::vector<std::size_t> counts_by_dim;
  double estimate = 0;  ///< subspaces examined
};

/// All subalgebras of an F_p algebra, including 0 and L. Throws
/// BudgetGuardExceeded when the subspace count exceeds the guard.
SubalgebraEnumeration enumerate_subalgebras(const LieAlgebra& L, const OracleOptions& opts = {});

/// Depth of every enumerated subalgebra (index-aligned with `subalgebras`),
/// memoized on the canonical basis. `order` permutes the evaluation order.
std::vector<std::size_t> depth_table(const SubalgebraEnumeration& e, const std::vector<std::size_t>& order = {});

/// Depth of an F_p algebra by exhaustive recursion over its subalgebras.
std::size_t depth_bruteforce(const LieAlgebra& L, const OracleOptions& opts = {});

enum class Property { Regular, Anisotropic, MNA };

struct BruteforceResult {
  bool holds = false;
  std::vector<Vec> witness;  ///< an element, or a subalgebra basis for MNA
  std::size_t examined = 0;
};

/// Exhaustive check over F_p. Elements are visited up to scaling (first
/// nonzero coordinate 1) with coordinate 0 least significant.
BruteforceResult property_bruteforce(const LieAlgebra& L, Property which, const OracleOptions& opts = {});

/// Longest chain of A-invariant subspaces 0 = V_0 < ... < V_m = V over F_p,
/// by enumerating every subspace.
std::size_t invariant_chain_bruteforce(const Mat& a, const OracleOptions& opts = {});

}  // namespace lieprop
