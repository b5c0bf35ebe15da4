#include <gtest/gtest.h>

#include "pascalgeo/json_io.hpp"
#include "pascalgeo/random.hpp"
#include "pascalgeo/svg.hpp"

using namespace pascalgeo;
using json_io::Json;

TEST(JsonIo, RationalRoundTrip) {
  Sampler rng(11);
  for (int i = 0; i < 50; ++i) {
    const Rational r = rng.rational();
    EXPECT_EQ(json_io::rational_from(json_io::to_json(r)), r);
  }
  EXPECT_EQ(json_io::rational_from(Json(7)), Rational(7));
  EXPECT_EQ(json_io::rational_from(Json("-3/6")), Rational(-1, 2));
  EXPECT_THROW(json_io::rational_from(Json(1.5)), ParseError);
  EXPECT_THROW(json_io::rational_from(Json("1/0")), ParseError);
}

TEST(JsonIo, SextupleRoundTrip) {
  Sampler rng(12);
  for (int i = 0; i < 20; ++i) {
    const Sextuple h = rng.injective_sextuple();
    EXPECT_EQ(json_io::sextuple_from(json_io::to_json(h)), h);
  }
  const Sextuple inf = json_io::sextuple_from(
      json_io::parse_document(R"({"A":"inf","B":0,"C":"1","D":"2","E":"1/2","F":"-1"})"));
  EXPECT_EQ(inf[Letter::A], P1Point::infinity());
  EXPECT_EQ(json_io::to_json(inf)["A"], "inf");
}

TEST(JsonIo, SextupleRejects) {
  EXPECT_THROW(json_io::sextuple_from(Json::array()), ParseError);
  EXPECT_THROW(json_io::sextuple_from(json_io::parse_document(R"({"A":1,"B":2,"C":3,"D":4,"E":5})")), ParseError);
  EXPECT_THROW(json_io::sextuple_from(json_io::parse_document(R"({"A":1,"B":2,"C":3,"D":4,"E":5,"G":6})")),
               ParseError);
  EXPECT_THROW(json_io::parse_document("{\"A\":"), ParseError);
}

TEST(JsonIo, HomogeneousRejects) {
  EXPECT_THROW(json_io::point_from(json_io::parse_document(R"(["0","0","0"])")), DomainError);
  EXPECT_THROW(json_io::point_from(json_io::parse_document(R"(["1","2"])")), ParseError);
  EXPECT_EQ(json_io::line_from(json_io::parse_document(R"(["2","4","-6"])")), make_line(1, 2, -3));
}

TEST(JsonIo, SpecRoundTrip) {
  const char* text = R"({
    "base": {"A":0,"B":0,"C":0,"D":"inf","E":1,"F":-1},
    "symbol": "ABC/FED",
    "fiber": {"kind":"codim2","coords":["1","2"]}})";
  const DegenerationSpec s = json_io::spec_from(json_io::parse_document(text));
  const DegenerationSpec back = json_io::spec_from(json_io::to_json(s));
  EXPECT_EQ(json_io::to_json(back).dump(), json_io::to_json(s).dump());

  const char* lline = R"({
    "base": {"A":1,"B":0,"C":-1,"D":-1,"E":0,"F":1},
    "symbol": "ACD/FBE",
    "fiber": {"kind":"lline222","marked":"CD.BE","coords":["1","5"]}})";
  const Json j = json_io::to_json(json_io::spec_from(json_io::parse_document(lline)));
  EXPECT_EQ(j["fiber"]["marked"], "BE.CD");
  EXPECT_EQ(j["fiber"]["coords"], json_io::parse_document(R"(["1","5"])"));
}

TEST(JsonIo, SpecRejects) {
  EXPECT_THROW(json_io::fiber_from(json_io::parse_document(R"({"kind":"other","coords":[1,2]})")), ParseError);
  EXPECT_THROW(json_io::fiber_from(json_io::parse_document(R"({"coords":[1,2]})")), ParseError);
  EXPECT_THROW(json_io::fiber_from(json_io::parse_document(R"({"kind":"lline222","coords":[1,2]})")), ParseError);
  EXPECT_THROW(json_io::symbol_from(Json("ABC/FEE")), ParseError);
}

TEST(JsonIo, ReportRoundTrip) {
  IncidenceReport<ProjLine> r;
  r.families.push_back({make_line(0, 0, 1), {"p", "q", "r"}});
  const auto back = json_io::report_from<ProjLine>(json_io::to_json(r));
  ASSERT_EQ(back.families.size(), 1U);
  EXPECT_EQ(back.families[0].carrier, r.families[0].carrier);
  EXPECT_EQ(back.families[0].members, r.families[0].members);
}

TEST(Svg, ChartSendsConicToUnitCircle) {
  Sampler rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto q = svg::to_chart(tau(P1Point::affine(rng.rational())));
    if (!q) continue;
    EXPECT_EQ(q->x * q->x + q->y * q->y, 1);
  }
}

TEST(Svg, DeterministicOutput) {
  auto build = [] {
    svg::Scene s;
    s.add_point(tau(P1Point::affine(0)), "A");
    s.add_line(make_line(1, 0, -1), "x<y");
    return s.str();
  };
  const std::string a = build();
  EXPECT_EQ(a, build());
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("x&lt;y"), std::string::npos);
  EXPECT_EQ(a.find("nothing renderable"), std::string::npos);
}

TEST(Svg, EmptySceneWarns) {
  svg::Scene s;
  EXPECT_FALSE(s.add_point(make_point(1, 0, -1), "off chart"));
  EXPECT_FALSE(s.add_line(make_line(1, 0, 1), "line at infinity"));
  EXPECT_EQ(s.drawn(), 0U);
  EXPECT_NE(s.str().find("nothing renderable in view"), std::string::npos);
}
