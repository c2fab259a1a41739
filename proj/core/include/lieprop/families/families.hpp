#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieprop/arith/factor.hpp"
#include "lieprop/arith/matrix.hpp"
#include "lieprop/arith/tristate.hpp"
#include "lieprop/lie/algebra.hpp"
#include "lieprop/spectral/spectral.hpp"

namespace lieprop {

enum class Family { Sl2, Heisenberg, Aff1, CaseI, CaseII, CaseIII, CaseIV, CaseV };

std::string_view to_string(Family f) noexcept;

struct FamilyInstance {
  Family tag = Family::Sl2;
  std::vector<std::pair<std::string, std::string>> params;
  LieAlgebra algebra;
  TriState validation;
  /// case_i_ii with M = 0: t central, Heisenberg ⊕ K.
  bool central_t = false;
};

struct Prototypes {
  LieAlgebra sl2;         ///< (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f
  LieAlgebra heisenberg;  ///< (x, y, z): [x,y] = z
  LieAlgebra aff1;        ///< (t, x): [t,x] = x
};
Prototypes prototypes(FieldSpec field = FieldSpec::rationals());

/// Companion matrix of a monic polynomial (last column carries -c_0 .. -c_{n-1}).
Mat companion(const UPoly& monic);

/// Basis (x, y, z, t), [x,y] = z, [t, x|y] by the columns of M, [t,z] = tr(M) z.
/// Throws BadTrace unless tr M is 0 or 1.
FamilyInstance case_i_ii(const Mat& m);

/// g ⊕ K for g certified simple and minimal nonabelian; else PreconditionNotCertified.
FamilyInstance case_iii(const LieAlgebra& g, const SearchBudget& budget = {});

/// S ⋉ V for S two-dimensional nonabelian or a certified 3-dim simple minimal
/// nonabelian algebra. Each basis element and `samples` further elements of S
/// are checked for an irreducible action.
FamilyInstance case_iv(const LieAlgebra& s, const std::vector<Mat>& rho, std::size_t samples = 200);

/// Abelian S (dimension rho.size(), 1 or 2) acting on V by commuting matrices.
FamilyInstance case_v(const std::vector<Mat>& rho, std::size_t samples = 200);

/// Longest chain of A-invariant subspaces 0 = V_0 < ... < V_m = V, read off
/// as the number of irreducible factors of the characteristic polynomial
/// counted with multiplicity. When the factorization is incomplete `value` is
/// only a lower bound.
struct ChainBound {
  std::size_t value = 0;
  bool exact = false;
  Factorization factorization;
};
ChainBound invariant_chain_bound(const Mat& a);

/// Minimal nonabelian test for solvable algebras (throws NotSolvable). False
/// witnesses are bases of proper nonabelian subalgebras; an abelian input is
/// False without witness.
TriState solvable_mna_status(const LieAlgebra& L);

/// Minimal nonabelian (depth 1). Over Q only.
TriState mna_status(const LieAlgebra& L, const SearchBudget& budget = {});

/// Depth exactly 2. Over Q only. False witnesses are proper subalgebras that
/// are neither abelian nor minimal nonabelian.
TriState depth2_status(const LieAlgebra& L, const SearchBudget& budget = {});

/// L ⊗ Q(√d) viewed over Q: basis e_0.., then √d e_0..; d must not be a square.
LieAlgebra quadratic_restriction(const LieAlgebra& L, long d);

}  // namespace lieprop
