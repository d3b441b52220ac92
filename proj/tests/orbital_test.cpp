#include <map>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "twopoint/catalog.hpp"
#include "twopoint/orbital.hpp"
#include "twopoint/subgroups.hpp"

using namespace twopoint;

namespace
{

Permutation P(char const *cycles, std::size_t n) { return Permutation::parse(cycles, n); }

// Sym(5) acting on the 10 two-element subsets of {0..4}.
PermGroup sym5_on_pairs()
{
  std::map<std::pair<Point, Point>, Point> index;
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < 5; ++a) {
    for (Point b = a + 1; b < 5; ++b) {
      index[{a, b}] = static_cast<Point>(pairs.size());
      pairs.emplace_back(a, b);
    }
  }
  std::vector<Permutation> gens;
  auto s5 = symmetric_group(5);
  for (auto const &g : s5.generators()) {
    std::vector<Point> images;
    for (auto [a, b] : pairs)
      images.push_back(index.at(std::minmax(g[a], g[b])));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(10, std::move(gens));
}

std::vector<std::size_t> lengths(std::vector<Suborbit> const &s)
{
  std::vector<std::size_t> out;
  for (auto const &x : s)
    out.push_back(x.length);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::NamedGroup> transitive_corpus()
{
  auto corpus = oracle::small_corpus();
  std::erase_if(corpus, [](auto const &named) { return !named.group.is_transitive(); });
  corpus.push_back({"Sym(5) on pairs", sym5_on_pairs()});
  return corpus;
}

} // namespace

TEST(OrbitalGraphTest, CompleteDigraphForSym3)
{
  OrbitalGraph gamma(symmetric_group(3), 0, 1);
  EXPECT_EQ(2u, gamma.valency());
  EXPECT_EQ(6u, gamma.arc_count());
  EXPECT_TRUE(is_self_paired(gamma));
  EXPECT_TRUE(plus_kernel(gamma).is_trivial());

  auto local = local_group(gamma);
  EXPECT_EQ(2u, local.group.degree());
  EXPECT_EQ(2u, local.group.order());
}

TEST(OrbitalGraphTest, DihedralHasValencyTwo)
{
  for (std::size_t p : {5u, 7u, 11u}) {
    OrbitalGraph gamma(dihedral_group(p), 0, 1);
    EXPECT_EQ(2u, gamma.valency());
    EXPECT_TRUE(is_self_paired(gamma));
    EXPECT_EQ(2u, local_group(gamma).group.order());
    EXPECT_TRUE(plus_kernel(gamma).is_trivial());
    EXPECT_TRUE(is_connected(gamma));
  }
}

TEST(OrbitalGraphTest, DirectedTriangle)
{
  OrbitalGraph gamma(cyclic_group(3), 0, 1);
  EXPECT_EQ(1u, gamma.valency());
  EXPECT_FALSE(is_self_paired(gamma));
  auto c = connectivity(gamma);
  EXPECT_TRUE(c.weak);
  EXPECT_TRUE(c.strong);
}

TEST(OrbitalGraphTest, ImprimitiveGroupGivesDisconnectedGraph)
{
  OrbitalGraph gamma(cyclic_group(4), 0, 2);
  auto c = connectivity(gamma);
  EXPECT_FALSE(c.weak);
  EXPECT_FALSE(c.strong);
}

TEST(OrbitalGraphTest, RejectsBadInput)
{
  EXPECT_THROW(OrbitalGraph(symmetric_group(4), 1, 1), std::invalid_argument);
  EXPECT_THROW(OrbitalGraph(PermGroup(4, {P("(0 1)(2 3)", 4)}), 0, 1), std::invalid_argument);
  EXPECT_THROW(suborbits(PermGroup(4, {P("(0 1)(2 3)", 4)}), 0), std::invalid_argument);
}

TEST(OrbitalGraphTest, BudgetGuardsArcs)
{
  Budget budget(5);
  EXPECT_THROW(OrbitalGraph(symmetric_group(4), 0, 1, &budget), Infeasible);
}

TEST(SuborbitTest, SmallExamples)
{
  EXPECT_EQ((std::vector<std::size_t>{1, 2}), lengths(suborbits(symmetric_group(3), 0)));
  EXPECT_EQ((std::vector<std::size_t>{1, 4}), lengths(suborbits(affine_line_group(5), 0)));

  auto s = suborbits(symmetric_group(3), 1);
  ASSERT_EQ(2u, s.size());
  EXPECT_EQ(0u, s[0].representative);
  EXPECT_FALSE(s[0].trivial);
  EXPECT_TRUE(s[1].trivial);
}

TEST(SuborbitTest, Sym5OnPairs)
{
  auto g = sym5_on_pairs();
  ASSERT_EQ(120u, g.order());
  auto s = suborbits(g, 0);
  EXPECT_EQ((std::vector<std::size_t>{1, 3, 6}), lengths(s));

  // Brute force: count G-orbits on ordered pairs of distinct points.
  auto all = oracle::closure(10, g.generators());
  std::set<std::set<std::pair<Point, Point>>> orbitals;
  for (Point b = 1; b < 10; ++b)
    orbitals.insert(oracle::orbital(all, 0, b));
  EXPECT_EQ(2u, orbitals.size());

  for (auto const &sub : s) {
    if (sub.trivial)
      continue;
    OrbitalGraph gamma(g, 0, sub.representative);
    EXPECT_EQ(sub.length, gamma.valency());
    EXPECT_TRUE(is_self_paired(gamma));
    EXPECT_TRUE(is_connected(gamma));
  }
}

TEST(KernelTest, AffineLineGroupKernelsAreTrivial)
{
  auto g = affine_line_group(7);
  auto all = oracle::closure(7, g.generators());
  for (Point b = 1; b < 7; ++b) {
    OrbitalGraph gamma(g, 0, b);
    auto oracle_kernel = oracle::pointwise_stabilizer(all, {0, b});
    EXPECT_EQ(1u, oracle_kernel.size());
    EXPECT_TRUE(plus_kernel(gamma).is_trivial());
    EXPECT_TRUE(minus_kernel(gamma).is_trivial());
  }
}

TEST(KernelTest, NontrivialKernelInWreathProduct)
{
  // Sym(2) wr Sym(3) on 6 points, blocks {0,1},{2,3},{4,5}. The orbital of
  // (0,1) has out-neighbourhood {1}; its kernel fixes 0 and 1 only.
  auto corpus = oracle::small_corpus();
  auto it = std::find_if(corpus.begin(), corpus.end(),
                         [](auto const &named) { return named.name == "Sym(2)wrSym(3)"; });
  ASSERT_NE(it, corpus.end());
  OrbitalGraph gamma(it->group, 0, 1);
  EXPECT_EQ(1u, gamma.valency());
  EXPECT_EQ(8u, plus_kernel(gamma).order());
  EXPECT_EQ(1u, local_group(gamma).group.order());
  EXPECT_FALSE(is_connected(gamma));
}

TEST(OrbitalPropertyTest, ArcSetMatchesBruteForce)
{
  for (auto const &[name, g] : transitive_corpus()) {
    auto all = oracle::closure(g.degree(), g.generators());
    for (auto const &sub : suborbits(g, 0)) {
      if (sub.trivial)
        continue;
      OrbitalGraph gamma(g, 0, sub.representative);
      auto arcs = oracle::orbital(all, 0, sub.representative);
      EXPECT_EQ(arcs.size(), gamma.arc_count()) << name;
      for (auto [a, b] : arcs)
        EXPECT_TRUE(gamma.has_arc(a, b)) << name;
      EXPECT_EQ(oracle::orbital(all, sub.representative, 0).count({0, sub.representative}) == 1,
                is_self_paired(gamma))
          << name;
    }
  }
}

TEST(OrbitalPropertyTest, ValencyAndSuborbitSums)
{
  for (auto const &[name, g] : transitive_corpus()) {
    for (Point a = 0; a < g.degree(); ++a) {
      std::size_t total = 0;
      for (auto const &sub : suborbits(g, a)) {
        total += sub.length;
        if (sub.trivial)
          continue;
        OrbitalGraph gamma(g, a, sub.representative);
        EXPECT_EQ(sub.length, gamma.valency()) << name;
        for (Point v = 0; v < g.degree(); ++v) {
          EXPECT_EQ(gamma.valency(), gamma.out(v).size()) << name;
          EXPECT_EQ(gamma.valency(), gamma.in(v).size()) << name;
        }
      }
      EXPECT_EQ(g.degree(), total) << name;
    }
  }
}

TEST(OrbitalPropertyTest, KernelsMatchBruteForceAndAreNormal)
{
  for (auto const &[name, g] : transitive_corpus()) {
    auto all = oracle::closure(g.degree(), g.generators());
    auto g0 = g.stabilizer(0);
    for (auto const &sub : suborbits(g, 0)) {
      if (sub.trivial)
        continue;
      Point b = sub.representative;
      OrbitalGraph gamma(g, 0, b);

      std::vector<Point> fixed{0};
      for (auto [x, y] : oracle::orbital(all, 0, b)) {
        if (x == 0)
          fixed.push_back(y);
      }
      auto expected_plus = oracle::pointwise_stabilizer(all, fixed);
      auto kernel = plus_kernel(gamma);
      EXPECT_EQ(expected_plus.size(), kernel.order()) << name;
      for (auto const &x : kernel.generators())
        EXPECT_TRUE(expected_plus.count(x)) << name;
      EXPECT_TRUE(is_normal(g0, kernel)) << name;

      std::vector<Point> fixed_minus{b};
      for (auto [x, y] : oracle::orbital(all, 0, b)) {
        if (y == b)
          fixed_minus.push_back(x);
      }
      auto minus = minus_kernel(gamma);
      EXPECT_EQ(oracle::pointwise_stabilizer(all, fixed_minus).size(), minus.order()) << name;
      EXPECT_TRUE(is_normal(g.stabilizer(b), minus)) << name;

      EXPECT_EQ(g0.order(), local_group(gamma).group.order() * kernel.order()) << name;
    }
  }
}

TEST(OrbitalPropertyTest, PrimitiveGroupsHaveConnectedOrbitals)
{
  for (auto const &[name, g] : transitive_corpus()) {
    bool primitive = g.is_primitive();
    for (auto const &sub : suborbits(g, 0)) {
      if (sub.trivial)
        continue;
      auto c = connectivity(OrbitalGraph(g, 0, sub.representative));
      EXPECT_EQ(c.weak, c.strong) << name;
      if (primitive) {
        EXPECT_TRUE(c.weak) << name;
      }
    }
  }
}
