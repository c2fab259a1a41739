#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lieprop/arith/linalg.hpp"
#include "lieprop/lie/structure.hpp"
#include "oracles.hpp"

using namespace lieprop;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vec v(const std::vector<long>& x, FieldSpec f = Q) { return int_vec(x, f); }

Subspace span(const LieAlgebra& L, const std::vector<Vec>& vs) { return Subspace::span(vs, L.dim(), L.field()); }

}  // namespace

TEST(Validate, KnownValues) {
  EXPECT_NO_THROW(fixture::sl2());
  EXPECT_NO_THROW(fixture::heisenberg());
  // [e,f] = h + e breaks Jacobi on (e, h, f).
  try {
    LieAlgebra::validate(3, Q,
                         {fixture::entry(0, 1, {-2, 0, 0}, Q), fixture::entry(0, 2, {1, 1, 0}, Q),
                          fixture::entry(1, 2, {0, 0, -2}, Q)});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& err) {
    ASSERT_EQ(err.triples().size(), 1u);
    EXPECT_EQ(err.triples()[0].i, 0u);
    EXPECT_EQ(err.triples()[0].j, 1u);
    EXPECT_EQ(err.triples()[0].k, 2u);
    EXPECT_FALSE(is_zero(err.triples()[0].residual));
  }
}

TEST(Validate, InputErrors) {
  EXPECT_THROW(LieAlgebra::validate(2, Q, {fixture::entry(1, 0, {1, 0}, Q)}), IndexOutOfRange);
  EXPECT_THROW(LieAlgebra::validate(2, Q, {fixture::entry(0, 2, {1, 0}, Q)}), IndexOutOfRange);
  EXPECT_THROW(LieAlgebra::validate(2, Q, {fixture::entry(0, 1, {1, 0, 0}, Q)}), DimensionMismatch);
  EXPECT_THROW(LieAlgebra::validate(2, Q, {fixture::entry(0, 1, {1, 0}, Q), fixture::entry(0, 1, {0, 1}, Q)}),
               BadScalar);
  EXPECT_THROW(LieAlgebra::validate(2, Q, {fixture::entry(0, 1, {1, 0}, FieldSpec::prime(3))}), FieldMismatch);
}

TEST(Validate, AgreesWithDenseJacobiOracleOnRandomTables) {
  oracle::Rng rng(77);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.range(2, 4));
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.range(0, 2) == 0) entries.push_back({i, j, oracle::random_vec(rng, n, 1, Q)});
    const bool ok = oracle::jacobi_failures(n, Q, entries).empty();
    if (ok) {
      EXPECT_NO_THROW(LieAlgebra::validate(n, Q, entries));
      ++accepted;
    } else {
      try {
        LieAlgebra::validate(n, Q, entries);
        ADD_FAILURE() << "accepted a table the oracle rejects";
      } catch (const JacobiViolation& err) {
        auto expected = oracle::jacobi_failures(n, Q, entries);
        ASSERT_EQ(err.triples().size(), expected.size());
        for (std::size_t t = 0; t < expected.size(); ++t) {
          EXPECT_EQ(err.triples()[t].i, expected[t][0]);
          EXPECT_EQ(err.triples()[t].j, expected[t][1]);
          EXPECT_EQ(err.triples()[t].k, expected[t][2]);
        }
      }
    }
  }
  EXPECT_GT(accepted, 10);
}

TEST(Ad, KnownValues) {
  LieAlgebra L = fixture::sl2();
  EXPECT_EQ(L.ad(v({0, 1, 0})), Mat::diagonal(v({2, 0, -2}), Q));
  EXPECT_TRUE(L.ad(L.zero()).is_zero());
  LieAlgebra H = fixture::heisenberg();
  Mat a = H.ad(v({2, -1, 5}));
  EXPECT_LE(rank(a), 1u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_TRUE(a(0, j).is_zero());
    EXPECT_TRUE(a(1, j).is_zero());
  }
  EXPECT_THROW(L.ad(v({1, 0})), DimensionMismatch);
}

TEST(Ad, IsAHomomorphismOnRandomVectors) {
  oracle::Rng rng(4);
  for (const LieAlgebra& L : {fixture::sl2(), fixture::heisenberg(), fixture::case_i_sqrt2(),
                              fixture::pure_quaternions(-1, -1)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Vec x = oracle::random_vec(rng, L.dim(), 3, Q), y = oracle::random_vec(rng, L.dim(), 3, Q);
      EXPECT_EQ(L.bracket(x, y), oracle::bracket(L, x, y));
      EXPECT_EQ(L.ad(L.bracket(x, y)), commutator(L.ad(x), L.ad(y)));
    }
  }
}

TEST(Closure, KnownValues) {
  LieAlgebra L = fixture::sl2();
  EXPECT_EQ(closure(L, {v({1, 0, 0})}, ClosureMode::Subalgebra), span(L, {v({1, 0, 0})}));
  EXPECT_TRUE(closure(L, {v({1, 0, 0})}, ClosureMode::Ideal).is_whole());
  LieAlgebra H = fixture::heisenberg();
  EXPECT_TRUE(closure(H, {v({1, 0, 0}), v({0, 1, 0})}, ClosureMode::Subalgebra).is_whole());
}

TEST(Closure, OutputIsClosedAndContainsGenerators) {
  oracle::Rng rng(8);
  for (const LieAlgebra& L : {fixture::sl2(), fixture::case_i_sqrt2()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Vec g = oracle::random_vec(rng, L.dim(), 2, Q);
      Vec h = oracle::random_vec(rng, L.dim(), 2, Q);
      Subspace s = closure(L, {g, h}, ClosureMode::Subalgebra);
      EXPECT_TRUE(s.contains(g) && s.contains(h));
      EXPECT_TRUE(is_subalgebra(L, s));
      Subspace i = closure(L, {g}, ClosureMode::Ideal);
      EXPECT_TRUE(is_ideal(L, i));
      EXPECT_TRUE(i.contains(g));
    }
  }
}

TEST(Centralizer, KnownValuesAndDoubleCentralizer) {
  LieAlgebra L = fixture::sl2();
  EXPECT_EQ(centralizer(L, span(L, {v({0, 1, 0})})), span(L, {v({0, 1, 0})}));
  LieAlgebra H = fixture::heisenberg();
  EXPECT_EQ(center(H), span(H, {v({0, 0, 1})}));
  LieAlgebra A = LieAlgebra::abelian(3, Q);
  EXPECT_TRUE(centralizer(A, span(A, {v({1, 2, 3})})).is_whole());
  EXPECT_TRUE(centralizer(L, Subspace(3, Q)).is_whole());

  oracle::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = oracle::random_vec(rng, 4, 3, Q);
    LieAlgebra C = fixture::case_i_sqrt2();
    Subspace sx = span(C, {x});
    EXPECT_TRUE(centralizer(C, centralizer(C, sx)).contains(sx));
  }
}

TEST(Normalizer, BorelOfSl2) {
  LieAlgebra L = fixture::sl2();
  EXPECT_EQ(normalizer(L, span(L, {v({1, 0, 0})})), span(L, {v({1, 0, 0}), v({0, 1, 0})}));
}

TEST(Series, KnownValues) {
  auto h = series(fixture::heisenberg());
  EXPECT_EQ(h.derived_dims, (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_TRUE(h.nilpotent);
  auto a = series(fixture::aff1());
  EXPECT_EQ(a.derived_dims, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(a.lower_central_dims, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_TRUE(a.solvable);
  EXPECT_FALSE(a.nilpotent);
  auto s = series(fixture::sl2());
  EXPECT_EQ(s.derived_dims, (std::vector<std::size_t>{3, 3}));
  EXPECT_FALSE(s.solvable);
  EXPECT_EQ(s.last_nonzero_derived.dim(), 3u);
}

TEST(Killing, KnownValues) {
  auto s = killing(fixture::sl2());
  EXPECT_EQ(determinant(s.gram), Scalar(-128, Q));
  EXPECT_EQ(s.gram(1, 1), Scalar(8, Q));
  EXPECT_EQ(s.gram(0, 2), Scalar(4, Q));
  EXPECT_TRUE(s.semisimple);
  EXPECT_TRUE(s.radical.is_zero());

  auto h = killing(fixture::heisenberg());
  EXPECT_TRUE(h.gram.is_zero());
  EXPECT_TRUE(h.radical.is_whole());

  auto a = killing(fixture::aff1());
  EXPECT_TRUE(a.radical.is_whole());
  EXPECT_TRUE(a.center.is_zero());
  EXPECT_FALSE(a.reductive);

  auto r = killing(direct_sum(fixture::sl2(), LieAlgebra::abelian(1, Q)));
  EXPECT_TRUE(r.reductive);
  EXPECT_EQ(r.center.dim(), 1u);

  EXPECT_THROW(killing(fixture::sl2(FieldSpec::prime(5))), RadicalUnavailableInPositiveCharacteristic);
  EXPECT_EQ(killing_gram(fixture::sl2(FieldSpec::prime(5))).rows(), 3u);
}

TEST(Killing, InvarianceAndAdditivity) {
  oracle::Rng rng(31);
  LieAlgebra L = fixture::case_i_sqrt2();
  Mat g = killing_gram(L);
  auto B = [&](const Vec& x, const Vec& y) {
    Scalar s = Scalar::zero(Q);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = oracle::random_vec(rng, 4, 3, Q), y = oracle::random_vec(rng, 4, 3, Q),
        w = oracle::random_vec(rng, 4, 3, Q);
    EXPECT_EQ(B(L.bracket(x, y), w) + B(y, L.bracket(x, w)), Scalar::zero(Q));
  }
  LieAlgebra a = fixture::sl2(), b = fixture::aff1();
  EXPECT_EQ(killing(direct_sum(a, b)).rank, killing(a).rank + killing(b).rank);
}

TEST(Compose, KnownValues) {
  LieAlgebra osc = semidirect_sum(LieAlgebra::abelian(1, Q), {Mat::from_ints({{0, -1}, {1, 0}}, Q)});
  EXPECT_EQ(osc.dim(), 3u);
  EXPECT_EQ(osc.basis_bracket(0, 1), v({0, 0, 1}));
  EXPECT_EQ(osc.basis_bracket(0, 2), v({0, -1, 0}));
  EXPECT_TRUE(series(osc).solvable);

  LieAlgebra H = fixture::heisenberg();
  LieAlgebra q = quotient(H, span(H, {v({0, 0, 1})}));
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(q.is_abelian());
  EXPECT_THROW(quotient(H, span(H, {v({1, 0, 0})})), NotAnIdeal);

  // aff1 acting on K^1 by t -> 1, x -> 1 is not a representation.
  try {
    semidirect_sum(fixture::aff1(), {Mat::from_ints({{1}}, Q), Mat::from_ints({{1}}, Q)});
    FAIL() << "expected NotARepresentation";
  } catch (const NotARepresentation& err) {
    ASSERT_EQ(err.pairs().size(), 1u);
    EXPECT_EQ(err.pairs()[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  }
}

TEST(Compose, QuotientsOfRandomIdealsValidate) {
  oracle::Rng rng(2);
  LieAlgebra L = direct_sum(fixture::case_i_sqrt2(), fixture::aff1());
  for (int trial = 0; trial < 15; ++trial) {
    Subspace i = closure(L, {oracle::random_vec(rng, L.dim(), 1, Q)}, ClosureMode::Ideal);
    LieAlgebra q = quotient(L, i);
    EXPECT_EQ(q.dim(), L.dim() - i.dim());
  }
}

TEST(RestrictTo, BorelIsAff1Shaped) {
  LieAlgebra L = fixture::sl2();
  LieAlgebra b = restrict_to(L, span(L, {v({1, 0, 0}), v({0, 1, 0})}));
  EXPECT_EQ(b.dim(), 2u);
  EXPECT_EQ(series(b).derived_dims, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_THROW(restrict_to(L, span(L, {v({1, 0, 0}), v({0, 0, 1})})), DimensionMismatch);
}

TEST(Simplicity, KnownValues) {
  auto s = simplicity_status(fixture::sl2());
  EXPECT_EQ(s.verdict, Verdict::True);
  EXPECT_EQ(s.fact("centroid_dim"), "1");

  LieAlgebra two = direct_sum(fixture::sl2(), fixture::sl2());
  auto t = simplicity_status(two);
  EXPECT_EQ(t.verdict, Verdict::False);
  EXPECT_EQ(Subspace::span(t.witness, 6, Q), span(two, {v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0}),
                                                        v({0, 0, 1, 0, 0, 0})}));
  EXPECT_TRUE(is_ideal(two, Subspace::span(t.witness, 6, Q)));

  auto h = simplicity_status(fixture::heisenberg());
  EXPECT_EQ(h.verdict, Verdict::False);
  EXPECT_EQ(h.witness.size(), 3u);
}

TEST(Simplicity, QuaternionFormsAreSimple) {
  EXPECT_EQ(simplicity_status(fixture::pure_quaternions(-1, -1)).verdict, Verdict::True);
  EXPECT_EQ(simplicity_status(fixture::pure_quaternions(2, 3)).verdict, Verdict::True);
}
