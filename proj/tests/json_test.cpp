#include "hopfcalc/builtins.hpp"
#include "hopfcalc/json_io.hpp"

#include <gtest/gtest.h>

using namespace hopfcalc;

TEST(Json, CyclotomicRoundTrip) {
  for (const CycNumber& c : {CycNumber(0), CycNumber(Rational(-3, 7)), root_of_unity(8, 3), root_of_unity(12, 1) + root_of_unity(3, 2)})
    EXPECT_EQ(cyc_from_json(to_json(c)), c);
  EXPECT_EQ(cyc_from_json(Json(5)), CycNumber(5));
  EXPECT_EQ(cyc_from_json(Json("-1/2")), CycNumber(Rational(-1, 2)));
  EXPECT_THROW(cyc_from_json(Json("x")), ParseError);
  EXPECT_THROW(cyc_from_json(parse_json_text(R"({"conductor": 4, "coeffs": ["1"]})")), ParseError);
}

TEST(Json, FusionDatumRoundTrip) {
  for (const char* name : {"S3", "D4", "Z3xZ3"}) {
    const auto f = from_group_characters(builtin_group(name));
    EXPECT_EQ(fusion_datum_from_json(parse_json_text(to_json(f).dump())), f) << name;
  }
  EXPECT_THROW(fusion_datum_from_json(parse_json_text(R"({"degrees": [1], "dual": [0], "constants": [[0, 0, 1, 1]]})")),
               ParseError);
  EXPECT_THROW(parse_json_text("{"), ParseError);
}

TEST(Json, HopfRoundTrip) {
  for (const HopfData& h : {build_h8(), from_group(builtin_group("S3")), dual(build_h8())})
    EXPECT_EQ(hopf_from_json(parse_json_text(to_json(h).dump())), h);
  Json bad = to_json(build_h8());
  bad["mult"][0][2] = 8;
  EXPECT_THROW(hopf_from_json(bad), ParseError);
}

TEST(Json, GroupSpecs) {
  const auto g = [](const char* text) { return group_from_json(parse_json_text(text)); };
  EXPECT_EQ(g(R"({"construct": "cyclic", "n": 5})").order(), 5);
  EXPECT_EQ(g(R"({"construct": "builtin", "name": "G18"})").order(), 18);
  EXPECT_EQ(g(R"({"construct": "product", "factors": [{"construct": "symmetric", "n": 3}, {"construct": "quaternion"}]})").order(), 48);
  // Z3 x| Z2 by inversion is S3
  const FiniteGroup s = g(R"({"construct": "semidirect", "normal": {"construct": "cyclic", "n": 3},
                              "acting": {"construct": "cyclic", "n": 2}, "action": [[0, 1, 2], [0, 2, 1]]})");
  EXPECT_EQ(s.order(), 6);
  EXPECT_EQ(s.conjugacy_classes().size(), 3u);
  EXPECT_THROW(g(R"({"construct": "torus"})"), ParseError);
  EXPECT_THROW(g(R"({"construct": "cyclic"})"), ParseError);
}

TEST(Json, TableRendering) {
  const Json j = parse_json_text(R"({"name": "x", "rows": [{"a": 1, "bb": true}, {"a": 22, "bb": false}], "list": [1, 2]})");
  const std::string t = render_table(j);
  EXPECT_NE(t.find("name: x"), std::string::npos);
  EXPECT_NE(t.find("a   bb"), std::string::npos);
  EXPECT_NE(t.find("22  false"), std::string::npos);
  EXPECT_NE(t.find("list: 1, 2"), std::string::npos);
}
