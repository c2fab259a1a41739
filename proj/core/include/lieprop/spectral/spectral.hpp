#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lieprop/arith/mpoly.hpp"
#include "lieprop/arith/tristate.hpp"
#include "lieprop/arith/upoly.hpp"
#include "lieprop/lie/algebra.hpp"
#include "lieprop/lie/subspace.hpp"

namespace lieprop {

/// Sampled-search limits: vectors of height ≤ max_height, at most
/// max_candidates of them.
struct SearchBudget {
  long max_height = 10;
  std::size_t max_candidates = 10000;
};

/// Dimension above which the symbolic rank is refused.
inline constexpr std::size_t kDefaultRankBound = 8;

struct ElementReport {
  UPoly charpoly;
  UPoly minpoly;
  bool semisimple = false;
  bool nilpotent = false;
  bool regular = false;
  std::size_t fitting0_dim = 0;
  std::size_t rank = 0;  ///< rank of the algebra used for `regular`
};

/// Computes rk L symbolically (subject to kDefaultRankBound).
ElementReport element_report(const LieAlgebra& L, const Vec& x);
/// Same with a known rank.
ElementReport element_report(const LieAlgebra& L, const Vec& x, std::size_t algebra_rank);

/// dim ker (ad x)^n: the multiplicity of 0 in the characteristic polynomial.
std::size_t fitting0_dim(const LieAlgebra& L, const Vec& x);

struct FittingComponents {
  Subspace null;
  Subspace one;
};

/// Single generator: ker and image of (ad x)^n. Several: the largest
/// subspace invariant under every ad g on which each acts nilpotently, and
/// the sum of the images of (ad g)^n.
FittingComponents fitting(const LieAlgebra& L, const std::vector<Vec>& generators);

struct RankCertificate {
  std::size_t rank = 0;
  MPoly coefficient;             ///< c_rank(t)
  std::vector<MPoly> coefficients;  ///< c_0 .. c_n of det(λ - Σ t_i ad e_i)
  Vec witness_point;             ///< c_rank nonzero here; empty if none was found
  bool vanished_below = false;   ///< c_i is the zero polynomial for i < rank
};

/// Bourbaki rank from the generic characteristic polynomial; throws
/// DimensionBudgetExceeded above `bound` (at most MPoly::kMaxVars - 1).
RankCertificate rank(const LieAlgebra& L, std::size_t bound = kDefaultRankBound);

/// Fitting null component of a regular x, verified to be a nilpotent
/// subalgebra equal to its own Fitting null component. Throws NotRegular.
Subspace cartan_from_regular(const LieAlgebra& L, const Vec& x);

/// First vector in search order satisfying `pred`, together with the number
/// of candidates examined.
struct SearchResult {
  std::optional<Vec> found;
  std::size_t examined = 0;
};
SearchResult search_elements(const LieAlgebra& L, const SearchBudget& budget,
                             const std::function<bool(const Vec&)>& pred);

/// Every ad x semisimple. Over Q only (PositiveCharacteristic otherwise).
TriState anisotropy_status(const LieAlgebra& L, const SearchBudget& budget = {});
/// Every nonzero element regular. Over Q only.
TriState regularity_status(const LieAlgebra& L, const SearchBudget& budget = {});

}  // namespace lieprop
