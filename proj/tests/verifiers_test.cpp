#include <gtest/gtest.h>

#include <algorithm>

#include "twopoint/catalog.hpp"
#include "twopoint/constructions.hpp"
#include "twopoint/verifiers.hpp"

using namespace twopoint;

namespace
{

Claim const *find_claim(VerificationReport const &r, std::string const &name)
{
  for (auto const &c : r.claims) {
    if (c.name == name)
      return &c;
  }
  return nullptr;
}

Permutation transposition() { return Permutation::from_cycles(3, {{0, 1}}); }

} // namespace

TEST(ReportTest, PassIsTheConjunctionOfClaims)
{
  VerificationReport r;
  r.check = "x";
  EXPECT_TRUE(r.pass());
  r.add("a", 3, 3, Provenance::paper);
  r.add_true("b", true, Provenance::trivial);
  EXPECT_TRUE(r.pass());
  r.add("c", "x", "y", Provenance::derived);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.claims.back().pass);
}

TEST(ReportTest, JsonRoundTrip)
{
  VerificationReport r;
  r.check = "demo";
  r.param("z", "1");
  r.param("a", "Sym(3)");
  r.add("order", 6, 6, Provenance::trivial);
  r.add("quoted \"name\" ✓", "x", "y", Provenance::paper);
  r.elapsed_ms = 42;
  auto text = report_to_json(r);
  EXPECT_EQ(report_from_json(text), r);
  // Parameters keep their insertion order.
  EXPECT_LT(text.find("\"z\""), text.find("\"a\""));
  EXPECT_NE(text.find("\"provenance\": \"PAPER\""), std::string::npos);
  EXPECT_NE(text.find("\"pass\": false"), std::string::npos);

  EXPECT_THROW(report_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(report_from_json("not json"), std::invalid_argument);
  auto tampered = text;
  tampered.replace(tampered.rfind("\"pass\": false"), 13, "\"pass\": true");
  EXPECT_THROW(report_from_json(tampered), std::invalid_argument);
}

TEST(ReportTest, TextMarksEachClaim)
{
  VerificationReport r;
  r.check = "demo";
  r.add("good", 1, 1, Provenance::paper);
  r.add("bad", 1, 2, Provenance::paper);
  auto text = report_to_text(r);
  EXPECT_NE(text.find("✓ good"), std::string::npos);
  EXPECT_NE(text.find("✗ bad"), std::string::npos);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
}

TEST(RegularNormalTest, AffineAndHolomorphGroups)
{
  Budget budget;
  for (std::uint64_t p : {5u, 7u, 11u}) {
    auto r = check_regular_normal("AGL1", affine_line_group(p), affine_translations(p), 0, budget);
    EXPECT_TRUE(r.pass()) << report_to_text(r);
    // One suborbit of length p-1: connectivity, kernel, generation.
    EXPECT_EQ(r.claims.size(), 3u);
  }
  auto hol = holomorph_simple(alternating_group(5), outer_transposition(alternating_group(5)));
  auto r = check_regular_normal("HS", hol.group, hol.right_regular, 0, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  EXPECT_EQ(r.claims.size(), 9u);
}

TEST(RegularNormalTest, Preconditions)
{
  Budget budget;
  // Sym(4) has the normal Klein group, but Alt(4) is not regular.
  EXPECT_THROW(check_regular_normal("S4", symmetric_group(4), alternating_group(4), 0, budget),
               PreconditionError);
  // A regular subgroup that is not normal.
  EXPECT_THROW(check_regular_normal("S4", symmetric_group(4), cyclic_group(4), 0, budget),
               PreconditionError);
  auto klein = PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                             Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  auto r = check_regular_normal("S4", symmetric_group(4), klein, 0, budget);
  EXPECT_TRUE(r.pass());
}

TEST(RegularNormalTest, DisconnectedGraphsAreSkipped)
{
  Budget budget;
  // Dihedral group of order 8 on 4 points: the orbital of the antipode is a matching.
  auto r = check_regular_normal("Dih4", dihedral_group(4), cyclic_group(4), 0, budget);
  EXPECT_TRUE(r.pass());
  auto it = std::find(r.params.begin(), r.params.end(),
                      std::pair<std::string, std::string>{"disconnected_skipped", "1"});
  EXPECT_NE(it, r.params.end());
}

TEST(SdTest, FirstSuborbitAndSmallCase)
{
  Budget budget;
  auto r = check_sd_dichotomy("Alt(5)", alternating_group(5), 2, true, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  auto first = check_sd_dichotomy("Alt(5)", alternating_group(5), 3, false, budget);
  EXPECT_TRUE(first.pass());
  EXPECT_EQ(first.claims.size(), 1u);
  EXPECT_THROW(check_sd_dichotomy("Sym(3)", symmetric_group(3), 3, false, budget),
               PreconditionError);
  EXPECT_THROW(check_sd_dichotomy("Alt(5)", alternating_group(5), 1, false, budget),
               PreconditionError);
}

TEST(SdTest, FullScanFindsBothBranches)
{
  Budget budget;
  auto r = check_sd_dichotomy("Alt(5)", alternating_group(5), 3, true, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  auto param = [&](std::string const &k) {
    for (auto const &[key, v] : r.params) {
      if (key == k)
        return v;
    }
    return std::string();
  };
  EXPECT_EQ(param("order"), "2592000");
  EXPECT_EQ(param("branch1"), "15");
  EXPECT_EQ(param("branch2"), "1");
  auto const *c = find_claim(r, "beta=62: |K| = factors");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->actual, "3");
}

TEST(AffineTest, BothParameterPoints)
{
  Budget budget;
  RunOptions oracle;
  oracle.mode = ScanMode::oracle;
  auto r = check_affine(2, 2, 3, "Sym(3)", symmetric_group(3), transposition(), oracle, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  EXPECT_EQ(find_claim(r, "|G_ab| = |P x V|")->actual, "8");
  EXPECT_EQ(find_claim(r, "|G_a^{+[1]}| = |V|")->actual, "4");
  EXPECT_EQ(find_claim(r, "|G_ab : G_a^{+[1]}| = p")->actual, "2");
  ASSERT_NE(find_claim(r, "full scan over T x H agrees with P x V"), nullptr);

  auto r2 = check_affine(2, 3, 7, "Sym(3)", symmetric_group(3), transposition(), oracle,
                         budget);
  EXPECT_TRUE(r2.pass()) << report_to_text(r2);
  EXPECT_EQ(find_claim(r2, "|G_ab| = |P x V|")->actual, "16");
  EXPECT_EQ(find_claim(r2, "|G_a^{+[1]}| = |V|")->actual, "8");
}

TEST(AffineTest, Preconditions)
{
  Budget budget;
  RunOptions fast;
  EXPECT_THROW(check_affine(3, 2, 2, "Sym(3)", symmetric_group(3), transposition(), fast,
                            budget),
               PreconditionError);
  // P of order 3 while p = 2.
  EXPECT_THROW(check_affine(2, 2, 3, "Sym(3)", symmetric_group(3),
                            Permutation::from_cycles(3, {{0, 1, 2}}), fast, budget),
               PreconditionError);
  // C_T(P) != P in Sym(4).
  EXPECT_THROW(check_affine(2, 2, 3, "Sym(4)", symmetric_group(4),
                            Permutation::from_cycles(4, {{0, 1}}), fast, budget),
               PreconditionError);
}

TEST(CoordinateMiniatureTest, FastAndOracleAgree)
{
  Budget budget;
  RunOptions options;
  options.mode = ScanMode::oracle;
  options.threads = 4;
  auto r = check_coordinate_miniature("Sym(3)", symmetric_group(3), 3, "Cyc(3)", cyclic_group(3),
                                      "Sym(6)", symmetric_group(6), options, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  EXPECT_EQ(find_claim(r, "|G_ab| = |V|")->actual, "216");
  // Kernel equality and normality are separate claims that must agree.
  EXPECT_EQ(find_claim(r, "G_ab = G_a^{+[1]}")->actual, "true");
  EXPECT_EQ(find_claim(r, "G_ab normal in G_a")->actual, "true");
  EXPECT_EQ(find_claim(r, "full scan over T x (V:H) agrees")->actual, "true");
}

TEST(CoordinateMiniatureTest, Preconditions)
{
  Budget budget;
  auto run = [&](PermGroup const &a, PermGroup const &h, PermGroup const &t) {
    return check_coordinate_miniature("A", a, 3, "H", h, "T", t, RunOptions{}, budget);
  };
  EXPECT_THROW(run(symmetric_group(3), symmetric_group(3), symmetric_group(6)), PreconditionError);
  // Z(A) != 1.
  EXPECT_THROW(run(cyclic_group(3), cyclic_group(3), symmetric_group(6)), PreconditionError);
  // (6 7) centralizes A x A.
  PermGroup spare(8, {Permutation::from_cycles(8, {{0, 1}}),
                      Permutation::from_cycles(8, {{0, 1, 2}}),
                      Permutation::from_cycles(8, {{3, 4}}),
                      Permutation::from_cycles(8, {{3, 4, 5}}),
                      Permutation::from_cycles(8, {{6, 7}})});
  EXPECT_THROW(run(symmetric_group(3), cyclic_group(3), spare), PreconditionError);
  EXPECT_THROW(run(symmetric_group(3), cyclic_group(3), symmetric_group(5)), PreconditionError);
}

TEST(IngredientsTest, TrueParameters)
{
  Budget budget;
  auto r = check_ingredients(61, {}, budget);
  EXPECT_TRUE(r.pass()) << report_to_text(r);
  EXPECT_EQ(r.claims.size(), 5u);
  EXPECT_EQ(r.claims[0].actual, "113460");
  EXPECT_NE(r.claims[2].actual.find("degree 1891"), std::string::npos);
}

TEST(IngredientsTest, HypothesisGate)
{
  Budget budget;
  EXPECT_THROW(check_ingredients(7, {}, budget), PreconditionError);
  EXPECT_THROW(check_ingredients(60, {}, budget), PreconditionError);
  RunOptions force;
  force.force = true;
  auto r = check_ingredients(7, force, budget);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.claims.size(), 5u);
}
