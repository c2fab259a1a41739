#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/families/families.hpp"
#include "lieprop/io/algebra_file.hpp"
#include "lieprop/lie/structure.hpp"

using namespace lieprop;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string where_of(const std::string& text) {
  try {
    io::parse_algebra(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST(ParseAlgebra, Sl2WithConsistentSigns) {
  const std::string text = R"({"field":"Q","dim":3,"brackets":[
    {"i":0,"j":1,"v":{"0":"-2"}},{"i":0,"j":2,"v":{"1":"1"}},{"i":1,"j":2,"v":{"2":"-2"}}]})";
  const LieAlgebra L = io::parse_algebra(text);
  EXPECT_EQ(L.brackets(), fixture::sl2().brackets());
  EXPECT_FALSE(L.has_custom_labels());
  EXPECT_TRUE(killing(L).semisimple);
}

TEST(ParseAlgebra, SignFlippedTableBreaksJacobi) {
  // [h,f] = +2f together with [e,h] = -2e is inconsistent.
  const std::string text = R"({"field":"Q","dim":3,"brackets":[
    {"i":0,"j":1,"v":{"0":"-2"}},{"i":0,"j":2,"v":{"1":"1"}},{"i":1,"j":2,"v":{"2":"2"}}]})";
  EXPECT_THROW(io::parse_algebra(text), JacobiViolation);
}

TEST(ParseAlgebra, NonCanonicalScalars) {
  for (const char* s : {"2/4", "+1", "01", "-0", "3/1"}) {
    const std::string text = std::string(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{"0":")") + s +
                             R"("}}]})";
    EXPECT_THROW(io::parse_algebra(text), NonCanonicalScalar) << s;
  }
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{"0":"1/-2"}}]})"), "/brackets/0/v/0");
  EXPECT_THROW(io::parse_algebra(R"({"field":{"Fp":5},"dim":2,"brackets":[{"i":0,"j":1,"v":{"1":"7"}}]})"),
               NonCanonicalScalar);
}

TEST(ParseAlgebra, MissingBracketsIsAbelian) {
  const LieAlgebra L = io::parse_algebra(R"({"field":"Q","dim":4})");
  EXPECT_EQ(L, LieAlgebra::abelian(4, FieldSpec::rationals()));
  EXPECT_EQ(io::parse_algebra(R"({"field":{"Fp":3},"dim":2,"brackets":[]})"),
            LieAlgebra::abelian(2, FieldSpec::prime(3)));
}

TEST(ParseAlgebra, ErrorLocations) {
  EXPECT_EQ(where_of("{\"field\":\"Q\",\n \"dim\": 3,,}"), "2:11");
  EXPECT_EQ(where_of(R"({"field":"R","dim":1})"), "/field");
  EXPECT_EQ(where_of(R"({"field":{"Fp":6},"dim":1})"), "/field/Fp");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":-1})"), "/dim");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"labels":["a"]})"), "/labels");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":1,"j":0,"v":{}}]})"), "/brackets/0");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":2,"v":{}}]})"), "/brackets/0/j");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{"2":"1"}}]})"), "/brackets/0/v/2");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{"0":"x"}}]})"), "/brackets/0/v/0");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{"0":1}}]})"), "/brackets/0/v/0");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"brackets":[{"i":0,"j":1,"v":{}},{"i":0,"j":1,"v":{}}]})"),
            "/brackets/1");
  EXPECT_EQ(where_of(R"({"field":"Q","dim":2,"extra":0})"), "/extra");
}

TEST(EmitAlgebra, CanonicalBytes) {
  EXPECT_EQ(io::emit_algebra(fixture::aff1()),
            "{\n"
            "  \"field\": \"Q\",\n"
            "  \"dim\": 2,\n"
            "  \"labels\": [\n    \"t\",\n    \"x\"\n  ],\n"
            "  \"brackets\": [\n"
            "    {\n      \"i\": 0,\n      \"j\": 1,\n      \"v\": {\n        \"1\": \"1\"\n      }\n    }\n"
            "  ]\n"
            "}\n");
}

TEST(EmitAlgebra, RoundTripsConstructedAlgebras) {
  const FieldSpec Q = FieldSpec::rationals();
  std::vector<LieAlgebra> zoo = {fixture::sl2(),
                                 fixture::heisenberg(FieldSpec::prime(5)),
                                 fixture::pure_quaternions(-1, -1),
                                 fixture::case_i_sqrt2(),
                                 LieAlgebra::abelian(3, Q),
                                 direct_sum(fixture::sl2(), fixture::sl2()),
                                 quadratic_restriction(fixture::pure_quaternions(-1, -1), 2)};
  for (const LieAlgebra& L : zoo) {
    const std::string bytes = io::emit_algebra(L);
    const LieAlgebra back = io::parse_algebra(bytes);
    EXPECT_EQ(back, L);
    EXPECT_EQ(io::emit_algebra(back), bytes);
  }
}

TEST(EmitAlgebra, RoundTripsEveryFixtureFile) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LIEPROP_TEST_DATA)) {
    if (entry.path().extension() != ".alg") continue;
    ++seen;
    const std::string bytes = slurp(entry.path());
    const LieAlgebra L = io::parse_algebra(bytes);
    EXPECT_EQ(io::emit_algebra(L), bytes) << entry.path();
  }
  EXPECT_GE(seen, 5);
}

TEST(Digest, Fnv1a) {
  EXPECT_EQ(io::fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a64("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(io::fnv1a64("foobar"), "85944171f73967e8");
}
