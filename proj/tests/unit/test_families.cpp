#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lieprop/arith/charpoly.hpp"
#include "lieprop/arith/linalg.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/families/families.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/oracle/oracle.hpp"
#include "oracles.hpp"

using namespace lieprop;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Mat m2(long a, long b, long c, long d, FieldSpec f = Q) { return Mat::from_ints({{a, b}, {c, d}}, f); }

Subspace span(const std::vector<std::vector<long>>& rows, std::size_t n) {
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(int_vec(r, Q));
  return Subspace::span(vs, n, Q);
}

Subspace witness_space(const LieAlgebra& L, const TriState& t) { return Subspace::span(t.witness, L.dim(), L.field()); }

UPoly poly(const std::vector<long>& c, FieldSpec f = Q) { return UPoly::from_ints(c, f); }

// A False depth-2 or MNA witness must be a proper nonabelian subalgebra.
void expect_proper_nonabelian(const LieAlgebra& L, const TriState& t) {
  ASSERT_TRUE(t.is_false());
  const Subspace s = witness_space(L, t);
  EXPECT_TRUE(is_subalgebra(L, s));
  EXPECT_LT(s.dim(), L.dim());
  EXPECT_FALSE(is_abelian(L, s));
}

}  // namespace

TEST(Prototypes, KnownValues) {
  Prototypes p = prototypes();
  EXPECT_EQ(p.sl2, fixture::sl2());
  EXPECT_EQ(p.heisenberg, fixture::heisenberg());
  EXPECT_EQ(p.aff1, fixture::aff1());
  EXPECT_EQ(determinant(killing_gram(p.sl2)), Scalar(mpq_class(-128)));
  EXPECT_EQ(depth_bruteforce(prototypes(F5).heisenberg), 1u);
  EXPECT_TRUE(property_bruteforce(prototypes(F5).aff1, Property::MNA).holds);
}

TEST(CaseIandII, KnownValues) {
  FamilyInstance sqrt2 = case_i_ii(m2(0, 2, 1, 0));
  EXPECT_EQ(sqrt2.tag, Family::CaseI);
  EXPECT_TRUE(sqrt2.validation.is_true());
  EXPECT_EQ(sqrt2.validation.fact("prime"), "3");
  EXPECT_EQ(sqrt2.algebra, fixture::case_i_sqrt2());

  FamilyInstance diag = case_i_ii(m2(1, 0, 0, -1));
  ASSERT_TRUE(diag.validation.is_false());
  EXPECT_EQ(diag.validation.witness[0], int_vec({1, 0}, Q));

  FamilyInstance two = case_i_ii(m2(1, -1, 1, 0));
  EXPECT_EQ(two.tag, Family::CaseII);
  EXPECT_TRUE(two.validation.is_true());

  EXPECT_THROW(case_i_ii(m2(1, 0, 0, 1)), BadTrace);
  EXPECT_THROW(case_i_ii(Mat::identity(3, Q)), DimensionMismatch);
}

TEST(CaseIandII, CentralT) {
  FamilyInstance central = case_i_ii(m2(0, 0, 0, 0));
  EXPECT_TRUE(central.central_t);
  EXPECT_TRUE(central.validation.is_true());
  EXPECT_EQ(central.algebra.brackets().size(), 1u);
  EXPECT_EQ(depth_bruteforce(reduce_mod_p(central.algebra, 3)), 2u);
  EXPECT_TRUE(depth2_status(central.algebra).is_true());
}

TEST(CaseIandII, AdTIsADerivation) {
  // Jacobi for every M of trace 0 or 1, checked by the dense oracle.
  oracle::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const long a = rng.range(-4, 4), b = rng.range(-4, 4), c = rng.range(-4, 4);
    const long tr = rng.range(0, 1);
    FamilyInstance inst = case_i_ii(m2(a, b, c, tr - a));
    EXPECT_TRUE(oracle::jacobi_failures(4, Q, inst.algebra.brackets()).empty());
    EXPECT_EQ(inst.tag, tr == 0 ? Family::CaseI : Family::CaseII);
    // The validation agrees with the discriminant test for a quadratic.
    const mpq_class disc = mpq_class(tr * tr) - 4 * (mpq_class(a * (tr - a)) - mpq_class(b * c));
    const bool square = disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t());
    if (a == 0 && b == 0 && c == 0 && tr == 0) continue;
    EXPECT_EQ(inst.validation.is_true(), !square);
  }
}

TEST(CaseIandII, DepthTwoModP) {
  // Certificates that survive reduction: λ² - 2 and λ² - λ + 1 are irreducible mod 5.
  for (const Mat& m : {m2(0, 2, 1, 0), m2(1, -1, 1, 0)}) {
    FamilyInstance inst = case_i_ii(m);
    ASSERT_TRUE(inst.validation.is_true());
    const LieAlgebra red = reduce_mod_p(inst.algebra, 5);
    const Mat mp = Mat::from_ints({{m(0, 0).rational().get_num().get_si(), m(0, 1).rational().get_num().get_si()},
                                   {m(1, 0).rational().get_num().get_si(), m(1, 1).rational().get_num().get_si()}},
                                  F5);
    ASSERT_TRUE(case_i_ii(mp).validation.is_true());
    EXPECT_EQ(depth_bruteforce(red), 2u);
    EXPECT_TRUE(depth2_status(inst.algebra).is_true());
  }
  EXPECT_EQ(depth_bruteforce(reduce_mod_p(case_i_ii(m2(1, 0, 0, -1)).algebra, 5)), 3u);
}

TEST(CaseIII, KnownValues) {
  FamilyInstance q = case_iii(fixture::pure_quaternions(-1, -1));
  EXPECT_EQ(q.algebra.dim(), 4u);
  EXPECT_TRUE(q.validation.is_true());
  EXPECT_TRUE(depth2_status(q.algebra).is_true());
  EXPECT_THROW(case_iii(fixture::sl2()), PreconditionNotCertified);
  EXPECT_THROW(case_iii(fixture::heisenberg()), PreconditionNotCertified);
}

TEST(CaseIV, KnownValues) {
  const LieAlgebra aff = fixture::aff1();
  EXPECT_THROW(case_iv(aff, {m2(0, -1, 1, 0), m2(1, 1, -2, -1)}), NotARepresentation);

  FamilyInstance split = case_iv(aff, {m2(1, 0, 0, 2), m2(0, 0, 1, 0)});
  ASSERT_TRUE(split.validation.is_false());
  EXPECT_EQ(split.validation.witness[0], int_vec({1, 0, 0, 0}, Q));

  // Bracket compatibility fails before any sampling: [ρ(j), ρ(k)] = -2ρ(i), not 2ρ(i).
  const Mat ri = m2(0, 1, -1, 0), rj = m2(1, 0, 0, -1);
  const Mat rk = Scalar::ratio(1, 2) * (ri * rj - rj * ri);
  EXPECT_THROW(case_iv(fixture::pure_quaternions(-1, -1), {ri, rj, rk}), NotARepresentation);

  FamilyInstance line = case_iv(aff, {Mat::from_ints({{3}}, Q), Mat::from_ints({{0}}, Q)});
  EXPECT_TRUE(line.validation.is_true());
  EXPECT_THROW(case_iv(fixture::heisenberg(), {}), PreconditionNotCertified);
}

TEST(CaseV, KnownValues) {
  const Mat c = companion(poly({1, 0, 1}) * poly({-2, 0, 1}));
  FamilyInstance two = case_v({c});
  EXPECT_TRUE(two.validation.is_true());
  EXPECT_EQ(two.validation.fact("chain_bound"), "2");

  FamilyInstance one = case_v({companion(poly({1, 0, 1}))});
  ASSERT_TRUE(one.validation.is_false());
  EXPECT_EQ(one.validation.fact("chain_bound"), "1");

  FamilyInstance three = case_v({Mat::diagonal(int_vec({1, 2, 3}, Q), Q)});
  ASSERT_TRUE(three.validation.is_false());
  EXPECT_EQ(three.validation.fact("chain_bound"), "3");

  EXPECT_THROW(case_v({m2(1, 1, 0, 1), m2(0, 0, 1, 0)}), NonCommutingAction);
}

TEST(CaseV, TwoDimensionalActingGroup) {
  const Mat c = companion(poly({1, 0, 1}) * poly({-2, 0, 1}));
  FamilyInstance with_identity = case_v({c, Mat::identity(4, Q)});
  ASSERT_TRUE(with_identity.validation.is_false());
  EXPECT_EQ(with_identity.validation.witness[0], int_vec({0, 1, 0, 0, 0, 0}, Q));
  EXPECT_EQ(with_identity.validation.fact("chain_bound"), "4");

  // Companion of (λ²+1)(λ²+3): s = a c + b c³ acts with two irreducible blocks for these samples.
  const Mat d = companion(poly({1, 0, 1}) * poly({3, 0, 1}));
  FamilyInstance sampled = case_v({d, d * d * d}, 20);
  EXPECT_FALSE(sampled.validation.is_true());
}

TEST(ChainBound, KnownValues) {
  EXPECT_EQ(invariant_chain_bound(companion(poly({1, 0, 1}))).value, 1u);
  EXPECT_EQ(invariant_chain_bound(Mat::diagonal(int_vec({1, 2}, Q), Q)).value, 2u);
  ChainBound jordan = invariant_chain_bound(m2(0, 1, 0, 0));
  EXPECT_EQ(jordan.value, 2u);
  EXPECT_TRUE(jordan.exact);
  EXPECT_THROW(invariant_chain_bound(Mat(2, 3, Q)), NotSquare);
}

TEST(ChainBound, MatchesExhaustiveChains) {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f = trial % 2 ? F3 : F5;
    const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 2));
    Mat a = oracle::random_int_mat(rng, n, n, 4, f);
    EXPECT_EQ(invariant_chain_bound(a).value, invariant_chain_bruteforce(a)) << a.str();
  }
}

TEST(SolvableMna, KnownValues) {
  EXPECT_TRUE(solvable_mna_status(fixture::heisenberg()).is_true());
  EXPECT_TRUE(solvable_mna_status(fixture::aff1()).is_true());
  const LieAlgebra ci = fixture::case_i_sqrt2();
  TriState t = solvable_mna_status(ci);
  expect_proper_nonabelian(ci, t);
  EXPECT_EQ(witness_space(ci, t), span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4));
  EXPECT_THROW(solvable_mna_status(fixture::sl2()), NotSolvable);
  EXPECT_TRUE(solvable_mna_status(LieAlgebra::abelian(2, Q)).is_false());
}

TEST(SolvableMna, AgreesWithOracle) {
  // K t ⋉ K^k for random integer actions, kept when the verdict is the same
  // over Q, F_3 and F_5.
  oracle::Rng rng(99);
  std::size_t compared = 0;
  for (int trial = 0; trial < 60 && compared < 20; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.range(0, 2));
    const Mat a = oracle::random_int_mat(rng, k, k, 3, Q);
    const LieAlgebra L = semidirect_sum(LieAlgebra::abelian(1, Q), {a});
    const Verdict over_q = solvable_mna_status(L).verdict;
    bool stable = true;
    for (std::uint32_t p : {3u, 5u}) stable = stable && solvable_mna_status(reduce_mod_p(L, p)).verdict == over_q;
    if (!stable || over_q == Verdict::Unknown) continue;
    ++compared;
    for (std::uint32_t p : {3u, 5u})
      EXPECT_EQ(property_bruteforce(reduce_mod_p(L, p), Property::MNA).holds, over_q == Verdict::True) << a.str();
  }
  EXPECT_GE(compared, 15u);
}

TEST(Mna, KnownValues) {
  EXPECT_TRUE(mna_status(fixture::pure_quaternions(-1, -1)).is_true());

  const LieAlgebra sl2 = fixture::sl2();
  TriState t = mna_status(sl2);
  expect_proper_nonabelian(sl2, t);
  EXPECT_EQ(witness_space(sl2, t), span({{1, 0, 0}, {0, 1, 0}}, 3));

  const LieAlgebra plus = direct_sum(sl2, LieAlgebra::abelian(1, Q));
  TriState p = mna_status(plus);
  expect_proper_nonabelian(plus, p);
  EXPECT_EQ(witness_space(plus, p), span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4));

  EXPECT_TRUE(mna_status(LieAlgebra::abelian(3, Q)).is_false());
  EXPECT_THROW(mna_status(fixture::sl2(F5)), PositiveCharacteristic);
}

TEST(Depth2, KnownValues) {
  EXPECT_TRUE(depth2_status(fixture::case_i_sqrt2()).is_true());
  TriState heis = depth2_status(fixture::heisenberg());
  EXPECT_TRUE(heis.is_false());
  EXPECT_EQ(heis.fact("depth"), "1");

  FamilyInstance three = case_v({Mat::diagonal(int_vec({1, 2, 3}, Q), Q)});
  TriState t = depth2_status(three.algebra);
  expect_proper_nonabelian(three.algebra, t);
  // t with the eigenlines of 1 and 2.
  EXPECT_EQ(witness_space(three.algebra, t), span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4));
}

TEST(Depth2, Zoo) {
  const LieAlgebra sl2 = fixture::sl2();
  const LieAlgebra k1 = LieAlgebra::abelian(1, Q);
  EXPECT_TRUE(depth2_status(sl2).is_true());
  EXPECT_TRUE(depth2_status(direct_sum(fixture::aff1(), k1)).is_true());
  EXPECT_TRUE(depth2_status(direct_sum(fixture::pure_quaternions(-1, -1), k1)).is_true());
  EXPECT_FALSE(depth2_status(fixture::pure_quaternions(-1, -1)).is_true());
  expect_proper_nonabelian(direct_sum(sl2, k1), depth2_status(direct_sum(sl2, k1)));
  expect_proper_nonabelian(direct_sum(sl2, sl2), depth2_status(direct_sum(sl2, sl2)));
  expect_proper_nonabelian(direct_sum(fixture::aff1(), fixture::aff1()),
                           depth2_status(direct_sum(fixture::aff1(), fixture::aff1())));
  const LieAlgebra diag = case_i_ii(m2(1, 0, 0, -1)).algebra;
  expect_proper_nonabelian(diag, depth2_status(diag));
  EXPECT_THROW(depth2_status(fixture::sl2(F3)), PositiveCharacteristic);
}

TEST(Depth2, NilpotentActionOnThreeDimensions) {
  // Filiform: [t, v0] = v1, [t, v1] = v2. Depth 2 by the oracle although no
  // case of the classification has this shape.
  const LieAlgebra fil = semidirect_sum(LieAlgebra::abelian(1, Q), {Mat::from_ints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, Q)});
  EXPECT_EQ(depth_bruteforce(reduce_mod_p(fil, 3)), 2u);
  TriState t = depth2_status(fil);
  EXPECT_TRUE(t.is_true());
  EXPECT_EQ(t.method, "nilpotent-action");

  // Four-dimensional nilpotent actions already have depth 3.
  for (const Mat& m : {Mat::from_ints({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, Q),
                       Mat::from_ints({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, Q)}) {
    const LieAlgebra L = semidirect_sum(LieAlgebra::abelian(1, Q), {m});
    EXPECT_EQ(depth_bruteforce(reduce_mod_p(L, 2)), 3u);
    expect_proper_nonabelian(L, depth2_status(L));
  }
}

TEST(Depth2, NeverTrueAgainstTheOracle) {
  // Fixtures whose certificates survive reduction mod 5 (λ² - 2 and λ² - λ + 1 stay irreducible).
  const LieAlgebra k1 = LieAlgebra::abelian(1, Q);
  const std::vector<LieAlgebra> zoo = {
      fixture::sl2(), fixture::heisenberg(), fixture::aff1(), fixture::case_i_sqrt2(),
      case_i_ii(m2(1, -1, 1, 0)).algebra, case_i_ii(m2(1, 0, 0, -1)).algebra, direct_sum(fixture::aff1(), k1),
      direct_sum(fixture::heisenberg(), k1), direct_sum(fixture::sl2(), k1),
      case_v({companion(poly({-2, 0, 1}))}).algebra, case_v({Mat::diagonal(int_vec({1, 2, 3}, Q), Q)}).algebra};
  for (const auto& L : zoo) {
    TriState t = depth2_status(L);
    const std::size_t d = depth_bruteforce(reduce_mod_p(L, 5));
    if (t.is_true()) EXPECT_EQ(d, 2u) << t.method;
    if (t.is_false() && !t.fact("depth").empty()) EXPECT_EQ(std::to_string(d), t.fact("depth"));
  }
}

TEST(QuadraticRestriction, SixDimensionalSimple) {
  const LieAlgebra big = quadratic_restriction(fixture::pure_quaternions(-1, -1), 2);
  EXPECT_EQ(big.dim(), 6u);
  EXPECT_TRUE(oracle::jacobi_failures(6, Q, big.brackets()).empty());
  TriState simple = simplicity_status(big);
  EXPECT_TRUE(simple.is_true());
  EXPECT_EQ(simple.method, "centroid-field");
  EXPECT_EQ(rank(big).rank, 2u);
  EXPECT_TRUE(regularity_status(big, {10, 100}).is_unknown());
  EXPECT_THROW(quadratic_restriction(fixture::sl2(), 4), BadScalar);
}

TEST(Families, ConstructorsPassJacobiModP) {
  const std::vector<LieAlgebra> built = {
      case_i_ii(m2(0, 2, 1, 0)).algebra, case_i_ii(m2(1, -1, 1, 0)).algebra,
      case_iii(fixture::pure_quaternions(-1, -1)).algebra,
      case_v({companion(poly({1, 0, 1}) * poly({-2, 0, 1}))}).algebra,
      case_iv(fixture::aff1(), {Mat::from_ints({{3}}, Q), Mat::from_ints({{0}}, Q)}).algebra};
  for (const auto& L : built) {
    EXPECT_TRUE(oracle::jacobi_failures(L.dim(), Q, L.brackets()).empty());
    for (std::uint32_t p : {3u, 5u, 7u}) EXPECT_NO_THROW(reduce_mod_p(L, p));
  }
}
