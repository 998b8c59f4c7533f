#include <gtest/gtest.h>

#include "nilrep/error.hpp"
#include "nilrep/parse.hpp"
#include "nilrep/report.hpp"

using namespace nilrep;

namespace {

AnalysisReport run(const char *group, const char *target, const AnalyzeOptions &o = {}) {
  return analyze(parse_group_spec(group), parse_reductive_spec(target), o);
}

} // namespace

TEST(Analyze, HeisenbergIntoSL2) {
  const auto r = run("H3", "SL2");
  EXPECT_EQ(r.r, 2u);
  EXPECT_EQ(r.h1, AbelianInvariants::free(2));
  EXPECT_TRUE(r.pi1_hom.is_trivial());
  EXPECT_TRUE(r.pi1_char.is_trivial());
  EXPECT_EQ(r.poincare_hom, (GradedPoly{1, 0, 1, 2}));
  EXPECT_EQ(r.poincare_char, (GradedPoly{1, 0, 1}));
  EXPECT_EQ(r.verdict.status, Connectivity::Disconnected);
  EXPECT_EQ(r.reduction, "Hom(Γ,G)₁ ≃ Hom(ℤ^2,G)₁");
  EXPECT_EQ(r.weyl_order, 2);
}

TEST(Analyze, CyclicIntoSL2) {
  const auto r = run("Z^1", "SL2");
  EXPECT_EQ(r.r, 1u);
  EXPECT_EQ(r.poincare_hom, (GradedPoly{1, 0, 0, 1}));
  EXPECT_EQ(r.verdict.status, Connectivity::Connected);
}

TEST(Analyze, FreeNilpotentIntoTorus) {
  const auto r = run("F(2,2)", "T1");
  EXPECT_EQ(r.r, 2u);
  EXPECT_EQ(r.pi1_hom, AbelianInvariants::free(2));
  EXPECT_EQ(r.poincare_hom, (GradedPoly{1, 2, 1}));
  EXPECT_EQ(r.verdict.status, Connectivity::Connected);
}

TEST(Analyze, HeisenbergIntoGL2) {
  const auto r = run("H3", "GL2");
  EXPECT_EQ(r.h1.rank, 2u);
  EXPECT_EQ(r.pi1_hom, AbelianInvariants::free(2));
  EXPECT_EQ(r.pi1_char, AbelianInvariants::free(2));
}

TEST(Analyze, Pi1HomIsPowerOfTargetPi1) {
  for (const char *t : {"SL3", "PGL2", "PGL3 x GL2", "SO5", "SO6 x T1", "Spin8", "G2"})
    for (const char *g : {"Z", "H3", "F(3,2)", "Z^3 x Z/2"}) {
      const auto r = run(g, t);
      EXPECT_EQ(r.pi1_hom, power(r.pi1_target, r.r)) << g << " " << t;
      ASSERT_TRUE(r.poincare_hom.has_value());
      EXPECT_EQ(r.poincare_hom->coefficient(0), 1);
    }
}

TEST(Analyze, TorusTargetsAreConnected) {
  for (const char *g : {"Z", "Z^3", "H3", "F(2,2)", "F(3,2)", "F(2,4)", "H3 x Z^2"})
    EXPECT_EQ(run(g, "T2").verdict.status, Connectivity::Connected) << g;
}

TEST(Analyze, Override) {
  AnalyzeOptions o;
  o.r_override = 3;
  const auto r = run("H3", "GL2", o);
  EXPECT_EQ(r.r, 3u);
  EXPECT_EQ(r.h1.rank, 2u);
  EXPECT_EQ(r.pi1_hom, AbelianInvariants::free(3));
  EXPECT_EQ(r.caveats.size(), run("H3", "GL2").caveats.size() + 1);
}

TEST(Analyze, GuardSkipsPolynomials) {
  AnalyzeOptions o;
  o.r_max_guard = 1;
  const auto r = run("H3", "SL2", o);
  EXPECT_FALSE(r.poincare_hom.has_value());
  EXPECT_FALSE(r.poincare_char.has_value());
  ASSERT_TRUE(r.poincare_note.has_value());
  const auto j = to_json(r);
  EXPECT_TRUE(j["poincare_hom"].is_null());
  EXPECT_TRUE(j.contains("poincare_note"));
}

TEST(Json, Fields) {
  const auto j = to_json(run("H3", "SL2"));
  for (const char *key : {"group", "target", "rank_h1", "torsion_h1", "reduction", "pi1_hom",
                          "pi1_char", "poincare_hom", "poincare_char", "verdict", "caveats"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["group"], "H3");
  EXPECT_EQ(j["target"], "SL2");
  EXPECT_EQ(j["rank_h1"], 2);
  EXPECT_EQ(j["poincare_hom"], nlohmann::json::parse("[1, 0, 1, 2]"));
  EXPECT_EQ(j["pi1_hom"], nlohmann::json::parse(R"({"rank": 0, "torsion": []})"));
  EXPECT_EQ(j["verdict"]["status"], "Disconnected");
  EXPECT_EQ(j["verdict"]["witness"], nlohmann::json::parse(R"(["i", "j", "-1"])"));
  EXPECT_FALSE(j["caveats"].empty());
}

TEST(Json, TorsionAndBignums) {
  const auto j = to_json(run("Z x Z/4", "PGL2"));
  EXPECT_EQ(j["torsion_h1"], nlohmann::json::parse("[4]"));
  EXPECT_EQ(j["pi1_hom"], nlohmann::json::parse(R"({"rank": 0, "torsion": [2]})"));
  EXPECT_EQ(to_json(GradedPoly::monomial(0, Integer("100000000000000000000"))),
            nlohmann::json::parse(R"(["100000000000000000000"])"));
}

TEST(Json, Deterministic) {
  for (const char *g : {"H3", "F(2,3)", "<x,y | [x,[x,y]], [y,[x,y]]>"})
    EXPECT_EQ(to_json(run(g, "Sp4 x T1")).dump(), to_json(run(g, "Sp4 x T1")).dump());
}

TEST(Json, Errors) {
  try {
    parse_group_spec("F(2");
    FAIL();
  } catch (const Error &e) {
    const auto j = error_to_json(e);
    EXPECT_EQ(j["error"]["kind"], "ParseError");
    EXPECT_EQ(j["error"]["position"], 3);
    EXPECT_TRUE(j["error"]["expected"].is_array());
  }
  const auto j = error_to_json(Error(ErrorKind::TooLarge, "big"));
  EXPECT_EQ(j["error"]["kind"], "TooLarge");
  EXPECT_FALSE(j["error"].contains("position"));
}

TEST(Text, MentionsEveryField) {
  const auto text = to_text(run("H3", "SL2"));
  for (const char *s : {"H3", "SL2", "1 + t^2 + 2t^3", "Disconnected", "caveats"})
    EXPECT_NE(text.find(s), std::string::npos) << s;
}
