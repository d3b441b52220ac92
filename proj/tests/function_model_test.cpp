#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "twopoint/catalog.hpp"
#include "twopoint/diagonal.hpp"
#include "twopoint/function_model.hpp"
#include "twopoint/orbital.hpp"
#include "twopoint/verifiers.hpp"

using namespace twopoint;

namespace
{

std::shared_ptr<ElementTable const> sym3_table()
{
  static auto t = std::make_shared<ElementTable const>(symmetric_group(3));
  return t;
}

Permutation random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i)
    images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

ImplicitElement random_element(FunctionSpace const &space, std::mt19937_64 &rng)
{
  auto const &t = space.table();
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(t.size() - 1));
  std::vector<Element> m(space.coordinates());
  for (auto &x : m)
    x = pick(rng);
  return {random_perm(space.coordinates(), rng), t.inner(pick(rng)), m};
}

FunctionPoint random_point(FunctionSpace const &space, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(space.table().size() - 1));
  std::vector<Element> v(space.coordinates());
  for (auto &x : v)
    x = pick(rng);
  return normalize(space, v);
}

} // namespace

TEST(CoordinateGroupTest, CyclicPowerArithmetic)
{
  auto v = CoordinateGroup::cyclic_power(3, 4);
  EXPECT_EQ(v.size(), 81u);
  for (Point x = 0; x < v.size(); ++x) {
    auto d = v.digits(x);
    EXPECT_EQ(v.index(d), x);
    EXPECT_EQ(v.mul(x, v.inv(x)), CoordinateGroup::identity());
  }
  std::vector<std::uint32_t> a{1, 2, 0, 1}, b{2, 2, 1, 0}, sum{0, 1, 1, 1};
  EXPECT_EQ(v.mul(v.index(a), v.index(b)), v.index(sum));
  EXPECT_EQ(v.generators().size(), 4u);
}

TEST(CoordinateGroupTest, PowerOfSym3)
{
  auto v = CoordinateGroup::power(*sym3_table(), 3);
  EXPECT_EQ(v.size(), 216u);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Point> pick(0, 215);
  for (int i = 0; i < 50; ++i) {
    Point a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(v.mul(v.mul(a, b), c), v.mul(a, v.mul(b, c)));
    EXPECT_EQ(v.right_translation(a) * v.right_translation(b), v.right_translation(v.mul(a, b)));
  }
  PermGroup generated(216, [&] {
    std::vector<Permutation> g;
    for (Point x : v.generators())
      g.push_back(v.right_translation(x));
    return g;
  }());
  EXPECT_EQ(generated.order(), 216u);
}

TEST(CoordinateGroupTest, CoordinatePermutationIsARightAction)
{
  auto v = CoordinateGroup::cyclic_power(2, 3);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto p = random_perm(3, rng), q = random_perm(3, rng);
    EXPECT_EQ(v.coordinate_permutation(p) * v.coordinate_permutation(q),
              v.coordinate_permutation(p * q));
  }
  // Coordinate 0 moves to coordinate 1 under (0 1 2).
  std::vector<std::uint32_t> e0{1, 0, 0}, e1{0, 1, 0};
  auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_EQ(v.coordinate_permutation(c)[v.index(e0)], v.index(e1));
}

TEST(CoordinateGroupTest, LinearMaps)
{
  auto v = CoordinateGroup::cyclic_power(2, 2);
  EXPECT_THROW(v.linear_map({{1, 1}, {1, 1}}), std::invalid_argument);
  auto g = v.linear_map({{0, 1}, {1, 1}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_THROW(CoordinateGroup::power(*sym3_table(), 2).linear_map({{1, 0}, {0, 1}}),
               std::invalid_argument);
}

TEST(HomomorphismSpecTest, AcceptsAndRejects)
{
  auto const &t = *sym3_table();
  auto v = CoordinateGroup::cyclic_power(2, 2);
  Budget budget;
  Element swap = t.index_of(Permutation::from_cycles(3, {{0, 1}}));

  std::vector<Element> good(4);
  for (Point x = 0; x < 4; ++x)
    good[x] = v.digits(x)[0] ? swap : ElementTable::identity();
  HomomorphismSpec w(v, t, good, budget);
  EXPECT_EQ(w.kernel(), (std::vector<Point>{0, 2}));
  EXPECT_EQ(w.image_set(), (std::vector<Element>{0, swap}));

  std::vector<Element> bad(4, swap);
  bad[0] = ElementTable::identity();
  EXPECT_THROW(HomomorphismSpec(v, t, bad, budget), PreconditionError);
  EXPECT_THROW(HomomorphismSpec(v, t, {0, 0}, budget), std::invalid_argument);
}

TEST(ImplicitElementTest, ComposeAndInverseMatchTheAction)
{
  FunctionSpace space(sym3_table(), 5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(space, rng), b = random_element(space, rng);
    auto f = random_point(space, rng);
    EXPECT_EQ(act(space, act(space, f, a), b), act(space, f, compose(space, a, b)));
    EXPECT_EQ(act(space, act(space, f, a), inverse(space, a)), f);
    EXPECT_EQ(compose(space, a, inverse(space, a)), identity_element(space));
  }
}

TEST(ImplicitElementTest, ConstantTranslationIsConjugation)
{
  FunctionSpace space(sym3_table(), 4);
  auto const &t = space.table();
  std::mt19937_64 rng(3);
  for (Element c = 0; c < t.size(); ++c) {
    auto f = random_point(space, rng);
    ImplicitElement constant{Permutation(4), t.identity_map(), std::vector<Element>(4, c)};
    EXPECT_EQ(act(space, f, constant), act(space, f, stabilizer_element(space, Permutation(4), c)));
    // Left multiplication by a constant does not change the coset.
    std::vector<Element> shifted(f.values);
    for (auto &x : shifted)
      x = t.mul(c, x);
    EXPECT_EQ(normalize(space, shifted), f);
  }
}

TEST(ImplicitElementTest, AgreesWithTheDiagonalModel)
{
  PermGroup sym3 = symmetric_group(3);
  DiagonalSpace explicit_space(sym3, 3);
  FunctionSpace space(sym3_table(), 4);
  ASSERT_EQ(explicit_space.table().size(), space.table().size());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto g = random_element(space, rng);
    Permutation explicit_g = perm_of_top(explicit_space, g.sigma) *
                             perm_of_automorphism(explicit_space, g.phi) *
                             perm_of_socle(explicit_space, g.m);
    for (Point x = 0; x < explicit_space.size(); x += 7) {
      auto image = act(space, FunctionPoint{explicit_space.tuple(x)}, g);
      EXPECT_EQ(explicit_space.point(image.values), explicit_g[x]);
    }
  }
}

TEST(FunctionPointTest, AffineBuilderProperties)
{
  Budget budget;
  auto s = make_affine_setup(2, 3, 7, symmetric_group(3), Permutation::from_cycles(3, {{0, 1}}),
                             budget);
  auto const &t = *s.t;
  auto const &v = s.module.v;
  EXPECT_EQ(s.beta.values[0], ElementTable::identity());
  for (Point x = 0; x < v.size(); ++x) {
    EXPECT_EQ(t.mul(s.beta.values[x], s.beta.values[v.inv(x)]), ElementTable::identity());
    EXPECT_EQ(s.beta.values[x], s.w(v.inv(x)));
    EXPECT_TRUE(stabilizes(s.space, s.beta, stabilizer_element(s.space, s.v_elements[x], 0)));
  }
  // Not onto P.
  std::vector<Element> trivial(v.size(), ElementTable::identity());
  HomomorphismSpec w1(v, t, trivial, budget);
  EXPECT_THROW(build_b_affine(s.space, v, w1, s.p_elements), PreconditionError);
}

TEST(FunctionPointTest, CoordinateBuilderProperties)
{
  Budget budget;
  auto s =
      make_coordinate_setup(symmetric_group(3), 3, cyclic_group(3), symmetric_group(6), budget);
  auto const &t = *s.t;
  EXPECT_EQ(s.beta.values[0], ElementTable::identity());
  for (Point x = 0; x < s.v.size(); ++x) {
    EXPECT_EQ(t.mul(s.beta.values[x], s.beta.values[s.v.inv(x)]), ElementTable::identity());
    // Translating b by v multiplies it on the left by w(v).
    std::vector<Element> moved(s.v.size());
    for (Point y = 0; y < s.v.size(); ++y)
      moved[s.v_elements[x][y]] = s.beta.values[y];
    for (Point y = 0; y < s.v.size(); ++y)
      EXPECT_EQ(moved[y], t.mul(s.w(x), s.beta.values[y]));
  }
  EXPECT_EQ(s.l.order(), 648u);
  EXPECT_EQ(s.w.image_set().size(), 36u);
}

TEST(ScanTest, MatchesExplicitStabilizersOnASharedInstance)
{
  Budget budget;
  auto s = make_affine_setup(2, 2, 3, symmetric_group(3), Permutation::from_cycles(3, {{0, 1}}),
                             budget);
  DiagonalSpace explicit_space(symmetric_group(3), 3);
  ASSERT_EQ(explicit_space.size(), 216u);

  std::vector<Permutation> gens = build_socle(explicit_space).generators();
  for (auto const &h : s.module.h.generators())
    gens.push_back(perm_of_top(explicit_space, h));
  PermGroup g(explicit_space.size(), gens);
  Point beta = explicit_space.point(s.beta.values);
  std::vector<Point> ab{DiagonalSpace::alpha(), beta};
  PermGroup g_ab = g.pointwise_stabilizer(ab);

  std::vector<Element> all(s.t->size());
  for (Element i = 0; i < all.size(); ++i)
    all[i] = i;
  auto scan = two_point_stabilizer_scan(s.space, s.beta, {all, s.h_elements}, budget);
  EXPECT_EQ(scan.scanned, all.size() * s.h_elements.size());
  EXPECT_EQ(scan.order(), 8u);
  EXPECT_EQ(g_ab.order(), scan.order());

  std::set<Permutation> from_scan;
  for (auto const &x : scan.elements)
    from_scan.insert(perm_of_socle(explicit_space, Tuple(4, x.t)) *
                     perm_of_top(explicit_space, x.sigma));
  auto explicit_elements = g_ab.elements(budget);
  EXPECT_EQ(from_scan, std::set<Permutation>(explicit_elements.begin(), explicit_elements.end()));

  auto kernel = plus_kernel_scan(s.space, s.beta, s.g_alpha_generators, scan.elements, budget);
  OrbitalGraph gamma(g, DiagonalSpace::alpha(), beta);
  EXPECT_EQ(kernel.order(), 4u);
  EXPECT_EQ(plus_kernel(gamma).order(), kernel.order());
  EXPECT_EQ(kernel.orbit_length, gamma.valency());
  EXPECT_TRUE(kernel.regular_on_coordinates);
}

TEST(ScanTest, ThreadsDoNotChangeTheResult)
{
  Budget budget;
  auto s =
      make_coordinate_setup(symmetric_group(3), 3, cyclic_group(3), symmetric_group(6), budget);
  std::vector<Element> all(s.t->size());
  for (Element i = 0; i < all.size(); ++i)
    all[i] = i;
  CandidateFamily family{all, s.h_elements};
  auto one = two_point_stabilizer_scan(s.space, s.beta, family, budget, 1);
  auto four = two_point_stabilizer_scan(s.space, s.beta, family, budget, 4);
  EXPECT_EQ(one.elements, four.elements);
  EXPECT_EQ(one.order(), 1u);
}

TEST(ScanTest, BudgetIsEnforced)
{
  Budget budget;
  auto s =
      make_coordinate_setup(symmetric_group(3), 3, cyclic_group(3), symmetric_group(6), budget);
  std::vector<Element> all(s.t->size());
  for (Element i = 0; i < all.size(); ++i)
    all[i] = i;
  Budget tiny(100);
  EXPECT_THROW(two_point_stabilizer_scan(s.space, s.beta, {all, s.h_elements}, tiny, 2),
               Infeasible);
}
