#include "twopoint/subgroups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace twopoint
{

namespace
{

class CentralizerSearch
{
public:
  CentralizerSearch(PermGroup const &g, std::vector<Permutation> const &s, Budget &budget)
  : _g(g), _s(s), _budget(budget), _degree(g.degree()),
    _img(_degree, -1), _pre(_degree, -1), _found(g.degree())
  {}

  PermGroup run()
  {
    descend(0, Permutation(_degree));
    return _found;
  }

  std::uint64_t nodes() const { return _nodes; }

private:
  // Records x -> y and everything it forces through x^s -> y^s.
  bool assign(Point x0, Point y0)
  {
    std::vector<std::pair<Point, Point>> queue{{x0, y0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto [x, y] = queue[i];
      if (_img[x] == static_cast<std::int64_t>(y))
        continue;
      if (_img[x] >= 0 || _pre[y] >= 0)
        return false;
      _img[x] = y;
      _pre[y] = x;
      _trail.push_back(x);
      for (auto const &s : _s)
        queue.emplace_back(s[x], s[y]);
    }
    _budget.charge(queue.size(), "centralizer backtrack");
    return true;
  }

  void undo(std::size_t mark)
  {
    while (_trail.size() > mark) {
      Point x = _trail.back();
      _trail.pop_back();
      _pre[static_cast<Point>(_img[x])] = -1;
      _img[x] = -1;
    }
  }

  // Candidates are G^(i) * prefix.
  void descend(std::size_t i, Permutation const &prefix)
  {
    ++_nodes;
    _budget.charge(1, "centralizer backtrack");

    if (i == _g.base_length()) {
      for (auto const &s : _s) {
        if (!commute(prefix, s))
          return;
      }
      if (!_found.contains(prefix)) {
        auto gens = _found.generators();
        gens.push_back(prefix);
        _found = PermGroup(_degree, std::move(gens));
      }
      return;
    }

    detail::Level const &level = _g.level(i);
    Point b = level.base;

    if (_img[b] >= 0) {
      // Forced: only delta with delta^prefix == img[b] survives.
      Point target = static_cast<Point>(_img[b]);
      Point delta = prefix.inverse()[target];
      if (level.in_orbit(delta))
        descend(i + 1, level.inverse_rep(delta).inverse() * prefix);
      return;
    }

    for (Point delta : level.orbit) {
      std::size_t mark = _trail.size();
      if (assign(b, prefix[delta]))
        descend(i + 1, level.inverse_rep(delta).inverse() * prefix);
      undo(mark);
    }
  }

  PermGroup const &_g;
  std::vector<Permutation> const &_s;
  Budget &_budget;
  std::size_t _degree;
  std::vector<std::int64_t> _img, _pre;
  std::vector<Point> _trail;
  PermGroup _found;
  std::uint64_t _nodes = 0;
};

struct KeyHash
{
  std::size_t operator()(std::vector<Point> const &key) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (Point x : key) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Lexicographically least base image over the coset (h-chain along g's base) x.
std::vector<Point> canonical_key(PermGroup const &h_chain, std::vector<Point> const &g_base,
                                 Permutation x)
{
  for (std::size_t l = 0; l < g_base.size(); ++l) {
    detail::Level const &level = h_chain.level(l);
    Point best = level.base;
    for (Point delta : level.orbit) {
      if (x[delta] < x[best])
        best = delta;
    }
    if (best != level.base)
      x = level.inverse_rep(best).inverse() * x;
  }
  return x.apply(g_base);
}

} // namespace

bool is_subgroup(PermGroup const &g, PermGroup const &h)
{
  if (g.degree() != h.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Permutation const &x) { return g.contains(x); });
}

CentralizerResult centralizer(PermGroup const &g, PermGroup const &s, Budget &budget)
{
  if (!is_subgroup(g, s))
    throw std::invalid_argument("centralizer: S is not a subgroup of G");

  std::vector<Permutation> const &gens = s.generators();

  std::uint64_t share = std::max<std::uint64_t>(1, (budget.limit() - budget.used()) / 2);
  Budget local(share);
  CentralizerSearch search(g, gens, local);
  try {
    PermGroup found = search.run();
    budget.charge(local.used(), "centralizer backtrack");
    return {std::move(found), CentralizerMethod::backtrack, search.nodes()};
  } catch (Infeasible const &) {
    budget.charge(local.used(), "centralizer backtrack");
  }

  return {centralizer_by_enumeration(g, s, budget), CentralizerMethod::enumeration, 0};
}

PermGroup centralizer_by_enumeration(PermGroup const &g, PermGroup const &s, Budget &budget)
{
  if (!is_subgroup(g, s))
    throw std::invalid_argument("centralizer: S is not a subgroup of G");

  if (g.order() > budget.limit() - budget.used())
    throw Infeasible("centralizer: |G| = " + std::to_string(g.order()) +
                     " exceeds the remaining enumeration budget");

  PermGroup result(g.degree());
  g.for_each_element(
    [&](Permutation const &x) {
      for (auto const &y : s.generators()) {
        if (!commute(x, y))
          return;
      }
      if (!result.contains(x)) {
        auto gens = result.generators();
        gens.push_back(x);
        result = PermGroup(g.degree(), std::move(gens));
      }
    },
    budget);
  return result;
}

bool is_normal(PermGroup const &g, PermGroup const &h)
{
  if (!is_subgroup(g, h))
    throw std::invalid_argument("is_normal: H is not a subgroup of G");

  for (auto const &x : h.generators()) {
    for (auto const &y : g.generators()) {
      if (!h.contains(conjugate(x, y)))
        return false;
    }
  }
  return true;
}

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &elements)
{
  PermGroup k(g.degree(), elements);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto const &x : k.generators()) {
      for (auto const &y : g.generators()) {
        Permutation c = conjugate(x, y);
        if (!k.contains(c)) {
          auto gens = k.generators();
          gens.push_back(c);
          k = PermGroup(g.degree(), std::move(gens));
          grew = true;
          break;
        }
      }
      if (grew)
        break;
    }
  }
  return k;
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Permutation> commutators;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

bool is_perfect(PermGroup const &g)
{
  return derived_subgroup(g).order() == g.order();
}

CosetAction coset_action(PermGroup const &g, PermGroup const &h, Budget &budget)
{
  if (!is_subgroup(g, h))
    throw std::invalid_argument("coset_action: H is not a subgroup of G");

  std::vector<Point> g_base = g.base();
  PermGroup h_chain = h.with_base_prefix(g_base);

  std::unordered_map<std::vector<Point>, std::size_t, KeyHash> index;
  CosetAction result;
  result.transversal.emplace_back(g.degree());
  index.emplace(canonical_key(h_chain, g_base, result.transversal[0]), 0);
  budget.charge(1, "coset enumeration");

  auto const &gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());

  for (std::size_t i = 0; i < result.transversal.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = result.transversal[i] * gens[s];
      auto key = canonical_key(h_chain, g_base, y);
      auto [it, inserted] = index.emplace(std::move(key), result.transversal.size());
      if (inserted) {
        budget.charge(1, "coset enumeration");
        result.transversal.push_back(std::move(y));
      }
      images[s].push_back(static_cast<Point>(it->second));
    }
  }

  std::vector<Permutation> image_gens;
  for (auto &im : images)
    image_gens.emplace_back(std::move(im));

  result.generator_images = image_gens;
  result.image = PermGroup(result.transversal.size(), std::move(image_gens));
  return result;
}

Permutation coset_image(PermGroup const &g, PermGroup const &h, CosetAction const &action,
                        Permutation const &x)
{
  std::vector<Point> g_base = g.base();
  PermGroup h_chain = h.with_base_prefix(g_base);

  std::unordered_map<std::vector<Point>, Point, KeyHash> index;
  for (std::size_t i = 0; i < action.transversal.size(); ++i)
    index.emplace(canonical_key(h_chain, g_base, action.transversal[i]), static_cast<Point>(i));

  std::vector<Point> images;
  for (auto const &rep : action.transversal) {
    auto it = index.find(canonical_key(h_chain, g_base, rep * x));
    if (it == index.end())
      throw std::invalid_argument("coset_image: element outside G");
    images.push_back(it->second);
  }
  return Permutation(std::move(images));
}

Alt5Search find_alt5_subgroup(PermGroup const &g, std::uint64_t seed, std::uint64_t max_attempts)
{
  Alt5Search result;
  result.a = result.b = Permutation(g.degree());
  if (g.order() % 60 != 0)
    return result;

  std::mt19937_64 rng(seed);

  auto power_of_order = [](Permutation const &x, std::uint64_t k) -> std::optional<Permutation> {
    std::uint64_t o = x.order();
    if (o % k != 0)
      return std::nullopt;
    return x.pow(static_cast<std::int64_t>(o / k));
  };

  std::optional<Permutation> a;
  while (result.attempts < max_attempts) {
    ++result.attempts;

    // Re-draw the involution now and then in case it is a bad choice.
    if (!a || result.attempts % 1000 == 0) {
      a = power_of_order(g.random_element(rng), 2);
      continue;
    }

    auto b = power_of_order(g.random_element(rng), 3);
    if (!b || (*a * *b).order() != 5)
      continue;

    PermGroup k(g.degree(), {*a, *b});
    if (k.order() == 60) {
      result.a = *a;
      result.b = *b;
      result.group = std::move(k);
      return result;
    }
  }
  return result;
}

} // namespace twopoint
