#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lieprop/arith/tristate.hpp"
#include "lieprop/lie/algebra.hpp"
#include "lieprop/lie/subspace.hpp"

namespace lieprop {

/// A place of Q: a prime, or the real place (stored as 0).
struct Place {
  mpz_class p;  ///< 0 for ∞

  static Place infinity() { return Place{0}; }
  /// Throws InvalidPlace unless p is prime.
  static Place prime(const mpz_class& p);
  bool is_infinite() const { return p == 0; }
  std::string str() const;
  friend bool operator==(const Place& a, const Place& b) { return a.p == b.p; }
  friend bool operator<(const Place& a, const Place& b);  // ∞ sorts last
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}; a, b nonzero rationals.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

/// The places that matter for (a, b): ∞, 2 and the odd primes dividing
/// numerators or denominators; ascending with ∞ last.
std::vector<Place> relevant_places(const mpq_class& a, const mpq_class& b);

struct DivisionCertificate {
  bool division = false;
  std::vector<Place> ramified;  ///< places with symbol -1
  std::vector<Place> checked;
  std::string ramified_str() const;
};

/// Quaternion algebra (a, b): i² = a, j² = b, ij = -ji = k.
DivisionCertificate is_division(const mpq_class& a, const mpq_class& b);

/// Pure quaternions with the commutator on (i, j, k):
/// [i,j] = 2k, [j,k] = -2b i, [k,i] = -2a j.
LieAlgebra pure_lie_algebra(const mpq_class& a, const mpq_class& b);

/// Associative centralizer of x = x0 + x1 i + x2 j + x3 k inside (a, b), in
/// coordinates (1, i, j, k). Throws CentralInput for x in Q·1.
Subspace quat_centralizer(const mpq_class& a, const mpq_class& b, const Vec& x);

/// Product in (a, b) on coordinates (1, i, j, k).
Vec quat_multiply(const mpq_class& a, const mpq_class& b, const Vec& x, const Vec& y);

/// Nonzero integer (x, y, z) with d0 x² + d1 y² + d2 z² = 0, searching
/// |y|, |z| ≤ bound; nullopt if none turns up.
std::optional<std::vector<mpz_class>> isotropic_vector(const mpq_class& d0, const mpq_class& d1,
                                                       const mpq_class& d2, long bound = 200);

/// Whether the ternary form <d0, d1, d2> is isotropic over Q, decided by
/// Hilbert symbols of (-d0 d1, -d0 d2).
DivisionCertificate ternary_certificate(const mpq_class& d0, const mpq_class& d1, const mpq_class& d2);

struct QuaternionReport {
  mpq_class a;
  mpq_class b;
  DivisionCertificate certificate;
  LieAlgebra algebra;
  // Division branch.
  Verdict anisotropic = Verdict::Unknown;
  Verdict regular = Verdict::Unknown;
  Verdict minimal_nonabelian = Verdict::Unknown;
  bool isomorphic_to_sl2 = false;
  int depth = 0;
  /// Split branch: a nonzero nilpotent element of the pure algebra.
  Vec nilpotent_witness;
};

QuaternionReport certified_report(const mpq_class& a, const mpq_class& b);

}  // namespace lieprop
