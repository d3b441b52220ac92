#include "twopoint/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace twopoint
{

using detail::Level;

namespace
{

constexpr std::uint64_t base_change_seed = 0x5eed'ba5e'c4a1'0001ull;

Level make_level(std::size_t degree, Point base)
{
  Level level;
  level.base = base;
  level.rep_index.assign(degree, -1);
  level.rep_index[base] = 0;
  level.orbit.push_back(base);
  level.inverse_reps.emplace_back(degree);
  return level;
}

// Grows the Schreier tree breadth-first over all generators, never replacing
// representatives of points already reached.
void extend_orbit(Level &level)
{
  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    Point x = level.orbit[pos];
    for (std::size_t g = 0; g < level.generators.size(); ++g) {
      Point y = level.generators[g][x];
      if (level.rep_index[y] >= 0)
        continue;

      // u_y = u_x * g, so u_y^-1 = g^-1 * u_x^-1
      level.rep_index[y] = static_cast<std::int32_t>(level.inverse_reps.size());
      level.inverse_reps.push_back(level.generator_inverses[g] *
                                   level.inverse_reps[level.rep_index[x]]);
      level.orbit.push_back(y);
    }
  }
}

void add_generator(Level &level, Permutation const &g)
{
  level.generators.push_back(g);
  level.generator_inverses.push_back(g.inverse());
  extend_orbit(level);
}

// Sifts `h` in place starting at level `first`; returns the level where it
// stopped.
std::size_t strip(std::vector<Level> const &levels, std::size_t first,
                  std::vector<Point> &h, std::vector<Point> &scratch)
{
  for (std::size_t l = first; l < levels.size(); ++l) {
    Level const &level = levels[l];
    Point gamma = h[level.base];
    if (level.rep_index[gamma] < 0)
      return l;

    if (gamma == level.base)
      continue;

    auto inv = level.inverse_reps[level.rep_index[gamma]].images();
    for (std::size_t x = 0; x < h.size(); ++x)
      scratch[x] = inv[h[x]];
    h.swap(scratch);
  }
  return levels.size();
}

bool is_identity(std::vector<Point> const &h)
{
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (h[x] != x)
      return false;
  }
  return true;
}

Point smallest_moved(std::vector<Point> const &h)
{
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (h[x] != x)
      return static_cast<Point>(x);
  }
  throw std::logic_error("identity has no moved point");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("group order exceeds 2^64");
  return a * b;
}

std::vector<Point> to_images(Permutation const &p)
{
  auto im = p.images();
  return {im.begin(), im.end()};
}

// Deterministic Schreier-Sims.
class ChainBuilder
{
public:
  explicit ChainBuilder(std::size_t degree)
  : _degree(degree), _h(degree), _scratch(degree)
  {}

  std::vector<Level> build(std::vector<Permutation> const &generators)
  {
    for (auto const &g : generators) {
      if (g.is_identity())
        continue;

      std::size_t j = 0;
      while (j < _levels.size() && g[_levels[j].base] == _levels[j].base)
        ++j;
      if (j == _levels.size())
        push_level(*g.smallest_moved_point());

      for (std::size_t l = 0; l <= j; ++l)
        add_to_level(l, g);
    }

    run();
    return std::move(_levels);
  }

private:
  void push_level(Point base)
  {
    _levels.push_back(make_level(_degree, base));
    _checked.emplace_back();
  }

  void add_to_level(std::size_t l, Permutation const &g)
  {
    add_generator(_levels[l], g);
    _checked[l].emplace_back();
  }

  void run()
  {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;

    while (i >= 0) {
      if (auto j = process_level(static_cast<std::size_t>(i)))
        i = static_cast<std::ptrdiff_t>(*j);
      else
        --i;
    }
  }

  // Checks pending Schreier generators of level i; on the first one that does
  // not sift, records the residue and returns the level it was added down to.
  std::optional<std::size_t> process_level(std::size_t i)
  {
    for (std::size_t pos = 0; pos < _levels[i].orbit.size(); ++pos) {
      for (std::size_t gi = 0; gi < _levels[i].generators.size(); ++gi) {
        auto &checked = _checked[i][gi];
        if (checked.size() < _levels[i].orbit.size())
          checked.resize(_levels[i].orbit.size(), 0);
        if (checked[pos])
          continue;
        checked[pos] = 1;

        Level const &level = _levels[i];
        Point beta = level.orbit[pos];
        Permutation const &x = level.generators[gi];
        Point gamma = x[beta];

        // h = u_beta * x * u_gamma^-1
        Permutation u_beta = level.inverse_rep(beta).inverse();
        auto ub = u_beta.images();
        auto ginv = level.inverse_rep(gamma).images();
        for (std::size_t p = 0; p < _degree; ++p)
          _h[p] = ginv[x[ub[p]]];

        if (is_identity(_h))
          continue;

        std::size_t j = strip(_levels, i + 1, _h, _scratch);
        if (j == _levels.size() && is_identity(_h))
          continue;

        Permutation residue(_h);
        if (j == _levels.size())
          push_level(smallest_moved(_h));
        for (std::size_t l = i + 1; l <= j; ++l)
          add_to_level(l, residue);
        return j;
      }
    }
    return std::nullopt;
  }

  std::size_t _degree;
  std::vector<Level> _levels;
  // _checked[level][generator][orbit position]
  std::vector<std::vector<std::vector<char>>> _checked;
  std::vector<Point> _h, _scratch;
};

std::vector<std::shared_ptr<Level const>> freeze(std::vector<Level> levels)
{
  std::vector<std::shared_ptr<Level const>> result;
  result.reserve(levels.size());
  for (auto &level : levels)
    result.push_back(std::make_shared<Level const>(std::move(level)));
  return result;
}

void check_point(std::size_t degree, Point x)
{
  if (x >= degree)
    throw std::invalid_argument("point " + std::to_string(x) +
                                " out of range for degree " + std::to_string(degree));
}

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: _degree(degree), _generators(std::move(generators))
{
  if (degree == 0)
    throw std::invalid_argument("permutation group degree must be positive");

  for (auto const &g : _generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " +
                                  std::to_string(degree));
  }

  _levels = freeze(ChainBuilder(degree).build(_generators));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<std::shared_ptr<detail::Level const>> levels)
: _degree(degree), _generators(std::move(generators)), _levels(std::move(levels))
{}

std::vector<Permutation> const &PermGroup::strong_generators() const
{
  static std::vector<Permutation> const none;
  return _levels.empty() ? none : _levels.front()->generators;
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> result;
  for (auto const &level : _levels)
    result.push_back(level->base);
  return result;
}

PermGroup::Order PermGroup::order() const
{
  Order result = 1;
  for (auto const &level : _levels)
    result = checked_mul(result, level->orbit.size());
  return result;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation const &p) const
{
  if (p.degree() != _degree)
    throw std::invalid_argument("degree mismatch in membership test");

  std::vector<Point> h = to_images(p), scratch(_degree);
  std::size_t depth = _levels.size();
  for (std::size_t l = 0; l < _levels.size(); ++l) {
    Level const &level = *_levels[l];
    Point gamma = h[level.base];
    if (!level.in_orbit(gamma)) {
      depth = l;
      break;
    }
    if (gamma == level.base)
      continue;
    auto inv = level.inverse_rep(gamma).images();
    for (std::size_t x = 0; x < _degree; ++x)
      scratch[x] = inv[h[x]];
    h.swap(scratch);
  }
  return {Permutation(std::move(h)), depth};
}

bool PermGroup::contains(Permutation const &p) const
{
  auto [residue, depth] = sift(p);
  return depth == _levels.size() && residue.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const
{
  check_point(_degree, x);

  std::vector<bool> seen(_degree, false);
  std::vector<Point> result{x};
  seen[x] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (auto const &g : _generators) {
      Point y = g[result[i]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> covered(_degree, false);
  for (Point x = 0; x < _degree; ++x) {
    if (covered[x])
      continue;
    auto o = orbit(x);
    for (Point y : o)
      covered[y] = true;
    result.push_back(std::move(o));
  }
  return result;
}

bool PermGroup::is_transitive() const
{
  return orbit(0).size() == _degree;
}

PermGroup PermGroup::suffix(std::size_t first_level) const
{
  auto from = _levels.begin() + static_cast<std::ptrdiff_t>(first_level);
  std::vector<std::shared_ptr<Level const>> levels(from, _levels.end());
  std::vector<Permutation> gens;
  if (!levels.empty())
    gens = levels.front()->generators;
  return PermGroup(_degree, std::move(gens), std::move(levels));
}

PermGroup PermGroup::with_base_prefix(std::span<Point const> prefix_in) const
{
  std::vector<Point> prefix;
  for (Point x : prefix_in) {
    check_point(_degree, x);
    if (std::find(prefix.begin(), prefix.end(), x) == prefix.end())
      prefix.push_back(x);
  }

  auto current = base();
  if (current.size() >= prefix.size() &&
      std::equal(prefix.begin(), prefix.end(), current.begin()))
    return *this;

  // Randomized Schreier-Sims with the order known in advance: the chain is
  // complete exactly when the product of the orbit lengths reaches it.
  Order target = order();

  std::vector<Level> levels;
  for (Point x : prefix)
    levels.push_back(make_level(_degree, x));

  auto product = [&] {
    Order result = 1;
    for (auto const &level : levels)
      result = checked_mul(result, level.orbit.size());
    return result;
  };

  std::mt19937_64 rng(base_change_seed);
  std::vector<Point> h(_degree), scratch(_degree);

  // Seed with the known strong generators before falling back to random
  // elements; on small groups that usually finishes the job.
  std::vector<Permutation> seeds = strong_generators();
  std::size_t next_seed = 0;

  while (product() < target) {
    if (next_seed < seeds.size()) {
      h = to_images(seeds[next_seed++]);
    } else {
      h = to_images(random_element(rng));
    }

    std::size_t j = strip(levels, 0, h, scratch);
    if (j == levels.size() && is_identity(h))
      continue;

    Permutation residue(h);
    if (j == levels.size())
      levels.push_back(make_level(_degree, smallest_moved(h)));
    for (std::size_t l = 0; l <= j; ++l)
      add_generator(levels[l], residue);
  }

  return PermGroup(_degree, _generators, freeze(std::move(levels)));
}

PermGroup PermGroup::stabilizer(Point x) const
{
  check_point(_degree, x);
  Point pts[] = {x};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<Point const> points) const
{
  if (points.empty())
    return *this;

  std::vector<Point> prefix;
  for (Point x : points) {
    check_point(_degree, x);
    if (std::find(prefix.begin(), prefix.end(), x) == prefix.end())
      prefix.push_back(x);
  }

  if (_levels.empty())
    return *this;

  return with_base_prefix(prefix).suffix(prefix.size());
}

std::optional<Permutation> PermGroup::transporter(Point a, Point b) const
{
  check_point(_degree, a);
  check_point(_degree, b);
  if (a == b)
    return Permutation(_degree);
  if (_levels.empty())
    return std::nullopt;

  Point pts[] = {a};
  PermGroup chain = with_base_prefix(pts);
  Level const &top = chain.level(0);
  if (!top.in_orbit(b))
    return std::nullopt;
  return top.inverse_rep(b).inverse();
}

PermGroup PermGroup::setwise_pair_stabilizer(Point a, Point b) const
{
  check_point(_degree, a);
  check_point(_degree, b);
  if (a == b)
    throw std::invalid_argument("setwise pair stabilizer needs two distinct points");

  Point pts[] = {a, b};
  PermGroup chain = with_base_prefix(pts);
  PermGroup pointwise = chain.suffix(2);

  std::vector<Permutation> gens = pointwise.strong_generators();

  Level const &first = chain.level(0);
  Level const &second = chain.level(1);
  if (first.in_orbit(b)) {
    // u: a -> b; then need h in G_a with b^h = a^(u^-1).
    Permutation u = first.inverse_rep(b).inverse();
    Point gamma = first.inverse_rep(b)[a];
    if (second.in_orbit(gamma)) {
      Permutation h = second.inverse_rep(gamma).inverse();
      gens.push_back(h * u);
    }
  }

  return PermGroup(_degree, std::move(gens));
}

Primitivity PermGroup::primitivity() const
{
  if (_degree < 2)
    throw std::invalid_argument("primitivity is only defined for degree >= 2");

  Primitivity result;
  result.transitive = is_transitive();
  if (!result.transitive)
    return result;

  // Minimal blocks through 0 and a representative of each suborbit; any
  // nontrivial block system has a block through 0 containing one of them.
  PermGroup stab = stabilizer(0);
  for (auto const &suborbit : stab.orbits()) {
    Point delta = suborbit.front();
    if (delta == 0)
      continue;

    auto block = minimal_block(_generators, _degree, 0, delta);
    if (block.size() < _degree) {
      std::vector<bool> covered(_degree, false);
      for (Point x = 0; x < _degree; ++x) {
        if (covered[x])
          continue;
        auto t = transporter(0, x);
        std::vector<Point> image = t->apply(block);
        std::sort(image.begin(), image.end());
        for (Point y : image)
          covered[y] = true;
        result.blocks.push_back(std::move(image));
      }
      return result;
    }
  }

  result.primitive = true;
  return result;
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const
{
  Permutation result(_degree);
  // g = u_{k-1} ... u_0 with u_i uniform in level i's transversal.
  for (std::size_t l = _levels.size(); l-- > 0;) {
    Level const &level = *_levels[l];
    Point target = level.orbit[rng() % level.orbit.size()];
    result = result * level.inverse_rep(target).inverse();
  }
  return result;
}

void PermGroup::for_each_element(std::function<void(Permutation const &)> const &visit,
                                 Budget &budget) const
{
  std::vector<std::vector<Permutation>> reps(_levels.size());
  for (std::size_t l = 0; l < _levels.size(); ++l) {
    for (Point x : _levels[l]->orbit)
      reps[l].push_back(_levels[l]->inverse_rep(x).inverse());
  }

  std::function<void(std::size_t, Permutation const &)> descend =
    [&](std::size_t depth, Permutation const &prefix) {
      if (depth == 0) {
        budget.charge(1, "element enumeration");
        visit(prefix);
        return;
      }
      for (auto const &u : reps[depth - 1])
        descend(depth - 1, prefix * u);
    };

  descend(_levels.size(), Permutation(_degree));
}

std::vector<Permutation> PermGroup::elements(Budget &budget) const
{
  std::vector<Permutation> result;
  for_each_element([&](Permutation const &g) { result.push_back(g); }, budget);
  std::sort(result.begin(), result.end());
  return result;
}

bool PermGroup::operator==(PermGroup const &other) const
{
  if (_degree != other._degree || order() != other.order())
    return false;
  for (auto const &g : other.strong_generators()) {
    if (!contains(g))
      return false;
  }
  return true;
}

std::vector<Point> minimal_block(std::span<Permutation const> gens, std::size_t degree,
                                 Point a, Point b)
{
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});

  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry)
      return;
    if (rx > ry)
      std::swap(rx, ry);
    parent[ry] = rx;
    queue.emplace_back(rx, ry);
  };

  unite(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (auto const &g : gens)
      unite(g[x], g[y]);
  }

  std::vector<Point> block;
  Point root = find(a);
  for (Point x = 0; x < degree; ++x) {
    if (find(x) == root)
      block.push_back(x);
  }
  return block;
}

} // namespace twopoint
