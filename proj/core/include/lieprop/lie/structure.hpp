#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieprop/arith/tristate.hpp"
#include "lieprop/lie/algebra.hpp"
#include "lieprop/lie/subspace.hpp"

namespace lieprop {

enum class ClosureMode { Subalgebra, Ideal };

/// Smallest subalgebra (or ideal) containing the generators.
Subspace closure(const LieAlgebra& L, const std::vector<Vec>& generators, ClosureMode mode);

/// span{[a, b] : a in A, b in B}.
Subspace bracket_space(const LieAlgebra& L, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& L);

Subspace centralizer(const LieAlgebra& L, const Subspace& s);
Subspace center(const LieAlgebra& L);
Subspace normalizer(const LieAlgebra& L, const Subspace& s);

bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
/// [s, s] = 0.
bool is_abelian(const LieAlgebra& L, const Subspace& s);

/// The subalgebra s as an algebra in its own echelon basis. Throws
/// DimensionMismatch when s is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& s);

struct SeriesReport {
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  std::vector<Subspace> derived;  ///< terms matching derived_dims
  bool solvable = false;
  bool nilpotent = false;
  /// Last nonzero term of the derived series (zero subspace when dim L = 0).
  Subspace last_nonzero_derived;
};

/// Dimension lists stop at the first repeated value or at 0.
SeriesReport series(const LieAlgebra& L);
/// Same as series() but for the subalgebra s, in ambient coordinates.
SeriesReport series(const LieAlgebra& L, const Subspace& s);

/// B(e_i, e_j) = tr(ad e_i ∘ ad e_j); available over every field.
Mat killing_gram(const LieAlgebra& L);

struct KillingReport {
  Mat gram;
  std::size_t rank = 0;
  Subspace radical;
  Subspace center;
  bool semisimple = false;
  bool reductive = false;
};

/// Over F_p throws RadicalUnavailableInPositiveCharacteristic; use killing_gram there.
KillingReport killing(const LieAlgebra& L);
Subspace radical(const LieAlgebra& L);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// S ⋉ V with V = K^m abelian and s_i acting by rho[i]; throws NotARepresentation.
LieAlgebra semidirect_sum(const LieAlgebra& s, const std::vector<Mat>& rho);
/// L / I on the unit vectors of I's free columns; throws NotAnIdeal.
LieAlgebra quotient(const LieAlgebra& L, const Subspace& ideal);

/// Basis of the commutant of ad(L).
std::vector<Mat> centroid(const LieAlgebra& L);

/// Centroid analysis. False witnesses are a proper nonzero ideal (basis rows)
/// or the radical; True is central simple, or simple over a centroid field.
TriState simplicity_status(const LieAlgebra& L);

}  // namespace lieprop
