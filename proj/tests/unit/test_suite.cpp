#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/io/algebra_file.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/spectral/spectral.hpp"
#include "lieprop/suite/suite.hpp"

using namespace lieprop;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST(LineHeight, ClearsDenominatorsAndContent) {
  EXPECT_EQ(suite::line_height(int_vec({0, 0, 0}, Q)), 0);
  EXPECT_EQ(suite::line_height(int_vec({2, -4, 6}, Q)), 3);
  EXPECT_EQ(suite::line_height({Scalar(mpq_class(1, 2)), Scalar(mpq_class(-1, 3)), Scalar(mpq_class(0))}), 3);
}

TEST(NonabelianPlane, FromNilpotentWitness) {
  const LieAlgebra sl2 = fixture::sl2();
  const auto plane = suite::nonabelian_plane_from(sl2, int_vec({1, 0, 0}, Q));
  ASSERT_TRUE(plane);
  EXPECT_EQ(plane->dim(), 2u);
  EXPECT_TRUE(is_subalgebra(sl2, *plane));
  EXPECT_FALSE(is_abelian(sl2, *plane));
  EXPECT_TRUE(plane->contains(int_vec({1, 0, 0}, Q)));
}

TEST(NonabelianPlane, FromMixedWitnessInSl2PlusSl2) {
  // (h, e) is neither semisimple nor nilpotent; its nilpotent part is (0, e).
  const LieAlgebra L = direct_sum(fixture::sl2(), fixture::sl2());
  const Vec w = int_vec({0, 1, 0, 1, 0, 0}, Q);
  EXPECT_FALSE(element_report(L, w).semisimple);
  const auto plane = suite::nonabelian_plane_from(L, w);
  ASSERT_TRUE(plane);
  EXPECT_TRUE(plane->contains(int_vec({0, 0, 0, 1, 0, 0}, Q)));
}

TEST(NonabelianPlane, SemisimpleInputGivesNothing) {
  EXPECT_FALSE(suite::nonabelian_plane_from(fixture::sl2(), int_vec({0, 1, 0}, Q)));
}

TEST(NonabelianPlane, SearchFindsBorelInSl2AndNothingInQuaternions) {
  const auto found = suite::nonabelian_plane_search(fixture::sl2(), 1);
  ASSERT_TRUE(found.found);
  EXPECT_TRUE(is_subalgebra(fixture::sl2(), *found.found));
  const auto none = suite::nonabelian_plane_search(fixture::pure_quaternions(-1, -1), 3);
  EXPECT_FALSE(none.found);
  EXPECT_GT(none.examined, 100u);
}

TEST(VerifySuite, QuaternionZooPasses) {
  const auto rep = suite::verify_suite(suite::Zoo::Quaternion, 0);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rows.size(), 10u);
}

TEST(VerifySuite, CorruptedFixtureIsRejectedAtTheGate) {
  const std::string corrupt = R"({"field":"Q","dim":3,"brackets":[
    {"i":0,"j":1,"v":{"0":"-2"}},{"i":0,"j":2,"v":{"1":"1"}},{"i":1,"j":2,"v":{"2":"2"}}]})";
  const auto rep = suite::verify_suite(suite::Zoo::Quaternion, 0,
                                       {{"corrupt", corrupt}, {"sl2", io::emit_algebra(fixture::sl2())}});
  ASSERT_EQ(rep.rejected.size(), 1u);
  EXPECT_EQ(rep.rejected[0].first, "corrupt");
  EXPECT_NE(rep.rejected[0].second.find("Jacobi"), std::string::npos);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rows.size(), 12u);
}

TEST(Criterion, OutOfRange) {
  EXPECT_THROW(suite::criterion(0), IndexOutOfRange);
  EXPECT_THROW(suite::criterion(11), IndexOutOfRange);
}

TEST(Criterion, SeedsOtherThanZero) {
  for (int id : {1, 4, 8, 10}) EXPECT_TRUE(suite::criterion(id, 12345).passed) << suite::criterion(id, 12345).detail;
}
