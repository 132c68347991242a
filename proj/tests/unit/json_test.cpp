#include <gtest/gtest.h>

#include "slocc/error.hpp"
#include "slocc/ilo.hpp"
#include "slocc/json_io.hpp"

using namespace slocc;

TEST(Json, StateRoundTrip) {
  for (const ClassLabel& l : {ClassLabel(Family::GHZ), ClassLabel(Family::Theta3, 2)}) {
    PureState s = random_ilo(make_canonical(l).dims(), 3).apply(make_canonical(l));
    EXPECT_TRUE(parse_state(dump_state(s)).exactly_equal(s));
  }
}

TEST(Json, ParseErrorsCarryContext) {
  try {
    parse_state("{\n  \"dims\": [2,2,2],\n  \"amplitudes\": [\n    {\"index\": [0,0,0] \"re\": \"1\"}\n  ]\n}", "f.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("f.json: line 4"), std::string::npos) << e.what();
  }
  auto msg = [](const std::string& text) {
    try {
      parse_state(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[{"index":[0,0,2],"re":"1","im":"0"}]})").find("amplitudes[0].index[2]"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[{"index":[0,0,0],"re":"2/4","im":"0"}]})").find("amplitudes[0].re"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[{"index":[0,0,0],"re":"0.5","im":"0"}]})").find("amplitudes[0].re"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[{"index":[0,0,0],"re":"1","im":"0"},{"index":[0,0,0],"re":"1","im":"0"}]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[{"index":[0,0,0],"re":"0","im":"0"}]})").find("nonzero"),
            std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2],"amplitudes":[]})").find("dims"), std::string::npos);
  EXPECT_NE(msg(R"({"dims":[2,2,2],"amplitudes":[],"extra":1})").find("unknown field"), std::string::npos);
}

TEST(Json, TripleRoundTrip) {
  LocalOperatorTriple g = random_ilo({2, 3, 4}, 1);
  EXPECT_EQ(triple_from_json(triple_json(g)), g);
}

TEST(Json, ReportsCarryKeyFields) {
  ClassificationResult r = classify(make_canonical({Family::Psi4}));
  json j = classification_json(r);
  EXPECT_EQ(j["label"], "Psi4");
  EXPECT_EQ(j["invariants"]["signature"], "[0,1,1]");
  EXPECT_FALSE(j["proof"].empty());
  EquivalenceVerdict v = decide_equivalence(make_canonical({Family::GHZ}), make_canonical({Family::W}));
  EXPECT_EQ(verdict_json(v)["verdict"], "Inequivalent");
}
