#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieprop/lie/algebra.hpp"
#include "lieprop/lie/subspace.hpp"

namespace lieprop::suite {

/// One line of a suite run.
struct Row {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriteria = 10;

/// Acceptance criterion `id` in 1..kCriteria (IndexOutOfRange otherwise).
Row criterion(int id, std::uint64_t seed = 0);
std::vector<Row> acceptance(std::uint64_t seed = 0);

enum class Zoo { Default, Quaternion };

/// An algebra file supplied to the suite by the caller.
struct Fixture {
  std::string name;
  std::string text;
};

struct SuiteReport {
  std::vector<Row> rows;
  /// Fixtures that failed parsing or validation, with the reason. These are
  /// gate failures and do not fail the suite.
  std::vector<std::pair<std::string, std::string>> rejected;
  bool passed() const;
};

/// Default zoo: the acceptance criteria. Quaternion zoo: for a fixed list of
/// (a, b), division must give anisotropic, regular and minimal nonabelian
/// all certified True, and a split algebra a nilpotent witness. Extra
/// fixtures get witness-replay rows and, when reductive over Q, the
/// pair-closure consistency row.
SuiteReport verify_suite(Zoo zoo, std::uint64_t seed, const std::vector<Fixture>& extra = {});

/// A two-dimensional nonabelian subalgebra built from an element whose ad is
/// not semisimple, in a reductive algebra over Q: the nilpotent part n of
/// the Jordan decomposition, then h = [n, z] solving [h, n] = 2n.
std::optional<Subspace> nonabelian_plane_from(const LieAlgebra& L, const Vec& w);

struct PlaneSearch {
  std::optional<Subspace> found;
  std::size_t examined = 0;
};
/// Pair-closure search over Q: every x of height ≤ max_height is paired with
/// the eigenvectors of ad x for nonzero rational eigenvalues, which is where
/// any partner y with span(x, y) a nonabelian subalgebra must lie.
PlaneSearch nonabelian_plane_search(const LieAlgebra& L, long max_height);

/// Height of the primitive integer vector on the line through v.
mpz_class line_height(const Vec& v);

}  // namespace lieprop::suite
