#include <gtest/gtest.h>

#include "a1h/serialize.hpp"

namespace a1h {
namespace {

const char* kCounterexample = R"json({ "ring": {"variables": ["x","y"]}, "blowup": {"pairs": [[1,1]]},
  "r0": "x*(y^2+x)", "sections": [{"kind":"beta","value":"x"},{"kind":"beta","value":"x*(1+y)"}] })json";

TEST(ParseLocal, PolynomialAndFraction) {
  RingPtr R = Ring::base({"x", "y"});
  EXPECT_EQ(parse_local("x*(1+y)", R), LocalElement(poly_parse("x+x*y", R)));
  LocalElement f = parse_local("(x)/(1+y)", R);
  EXPECT_EQ(f.den(), poly_parse("1+y", R));
  EXPECT_EQ(parse_local(f.to_string(), R), f);
  EXPECT_EQ(parse_local("1/2*x", R), LocalElement(poly_parse("x", R).scaled(Scalar::from_digits("1", "2"))));
  EXPECT_THROW(parse_local("x/(y)", R), DomainError);
}

TEST(Instance, RoundTrip) {
  ProblemInstance in = instance_from_json(Json::parse(kCounterexample));
  EXPECT_EQ(in.variables, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(in.pairs, (std::vector<BlowupPair>{{1, 1}}));
  EXPECT_EQ(instance_from_json(to_json(in)), in);
  // Canonical expressions re-parse to the same elements.
  ProblemInstance c = canonical(in);
  EXPECT_EQ(c.r0, "x*y^2 + x^2");
  ResolvedInstance a = resolve(in), b = resolve(c);
  EXPECT_EQ(a.r0, b.r0);
  for (std::size_t i = 0; i < a.sections.size(); ++i) EXPECT_EQ(a.sections[i], b.sections[i]);
  EXPECT_EQ(canonical(c), c);
}

TEST(Instance, Rejections) {
  EXPECT_THROW(instance_from_json(Json::parse(R"({"blowup":{"pairs":[]},"r0":"x"})")), ParseError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"ring":{"variables":["x"]},"blowup":{"pairs":[[1]]},"r0":"x"})")),
               ParseError);
  EXPECT_THROW(instance_from_json(Json::parse(
                   R"({"ring":{"variables":["x"]},"blowup":{"pairs":[]},"r0":"x","sections":[{"kind":"gamma","value":"x"}]})")),
               ParseError);
  ProblemInstance in = instance_from_json(Json::parse(R"({"ring":{"variables":["x","T"]},"blowup":{"pairs":[]},"r0":"x"})"));
  EXPECT_THROW(resolve(in), DomainError);
  in = instance_from_json(Json::parse(R"({"ring":{"variables":["x"]},"blowup":{"pairs":[[2,4]]},"r0":"x"})"));
  ResolvedInstance r = resolve(in);
  EXPECT_FALSE(r.blowup.ok());
  EXPECT_THROW(r.spec(), DomainError);
}

TEST(VerdictJson, CounterexampleCertificate) {
  ResolvedInstance r = resolve(instance_from_json(Json::parse(kCounterexample)));
  Json j = to_json(decide(r.r0, r.sections[0], r.sections[1], r.spec()));
  EXPECT_EQ(j["verdict"], "not_homotopic");
  EXPECT_EQ(j["certificate"]["element"], "y");
  EXPECT_EQ(j["certificate"]["basis"], Json::array({"x", "y^2"}));
  EXPECT_FALSE(j.contains("witness"));
  // Keys come out sorted.
  const std::string s = j.dump();
  EXPECT_LT(s.find("\"certificate\""), s.find("\"verdict\""));
}

TEST(VerdictJson, WitnessRoundTripVerifies) {
  RingPtr R = Ring::base({"x", "y"});
  LocalElement r0 = parse_local("x*(y^2+x)", R);
  Section s1 = Section::beta(parse_local("x", R)), s2 = Section::beta(parse_local("x*(1+y^2)", R));
  BlowupSpec spec = BlowupSpec::from_pairs({{1, 1}});
  Json j = to_json(decide(r0, s1, s2, spec));
  ASSERT_EQ(j["verdict"], "homotopic");
  Witness w{links_from_json(Json::parse(j.dump()), R), s1, s2};
  EXPECT_TRUE(verify_witness(w, r0, spec, s1, s2).ok());
  EXPECT_EQ(links_from_json(j["witness"], R).size(), w.links.size());
}

TEST(VerdictJson, AllEquivalent) {
  RingPtr R = Ring::base({"x"});
  Json j = to_json(decide(parse_local("1+x", R), Section::beta(parse_local("x", R)), Section::beta(parse_local("x^2", R)),
                          BlowupSpec::from_pairs({{1, 1}})));
  EXPECT_EQ(j["verdict"], "all_sections_equivalent");
  EXPECT_TRUE(j.contains("reason"));
}

TEST(ValidationJson, NamesViolation) {
  Json j = to_json(validate_blowup({{2, 3}, {1, 1}}));
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["violation"], "unrealizable");
  EXPECT_EQ(j["offending"], Json::array({2, 3}));
}

}  // namespace
}  // namespace a1h
