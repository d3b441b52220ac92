#include "twopoint/diagonal.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace twopoint
{

DiagonalSpace::DiagonalSpace(PermGroup t, std::size_t ell)
: _table(std::move(t)), _ell(ell), _size(1)
{
  if (ell == 0)
    throw std::invalid_argument("diagonal space needs at least two factors");
  for (std::size_t i = 0; i < ell; ++i) {
    _size *= _table.size();
    if (_size > max_points)
      throw Infeasible("diagonal space: |T|^" + std::to_string(ell) + " exceeds " +
                       std::to_string(max_points) + " points");
  }
}

void DiagonalSpace::check_tuple(std::span<Element const> tuple) const
{
  if (tuple.size() != factors())
    throw std::invalid_argument("diagonal space: tuple has " + std::to_string(tuple.size()) +
                                " entries, expected " + std::to_string(factors()));
  for (Element e : tuple) {
    if (e >= _table.size())
      throw std::invalid_argument("diagonal space: element index out of range");
  }
}

Tuple DiagonalSpace::normalize(std::span<Element const> tuple) const
{
  check_tuple(tuple);
  Element head = _table.inv(tuple[0]);
  Tuple out(factors());
  for (std::size_t i = 0; i < factors(); ++i)
    out[i] = _table.mul(head, tuple[i]);
  return out;
}

Point DiagonalSpace::point(std::span<Element const> tuple) const
{
  Tuple t = normalize(tuple);
  std::size_t index = 0;
  for (std::size_t i = _ell; i >= 1; --i)
    index = index * _table.size() + t[i];
  return static_cast<Point>(index);
}

Tuple DiagonalSpace::tuple(Point x) const
{
  if (x >= _size)
    throw std::invalid_argument("diagonal space: point out of range");
  Tuple t(factors(), ElementTable::identity());
  std::size_t rest = x;
  for (std::size_t i = 1; i <= _ell; ++i) {
    t[i] = static_cast<Element>(rest % _table.size());
    rest /= _table.size();
  }
  return t;
}

namespace
{

// Image of every point under a map on normalized tuples.
template <class F>
Permutation tabulate(DiagonalSpace const &space, F &&map)
{
  std::vector<Point> images(space.size());
  for (Point x = 0; x < space.size(); ++x)
    images[x] = space.point(map(space.tuple(x)));
  return Permutation(std::move(images));
}

std::vector<Tuple> factor_generators(DiagonalSpace const &space, std::size_t j)
{
  std::vector<Tuple> gens;
  for (Element g : space.table().generator_indices()) {
    Tuple t(space.factors(), ElementTable::identity());
    t[j] = g;
    gens.push_back(std::move(t));
  }
  return gens;
}

} // namespace

Permutation perm_of_socle(DiagonalSpace const &space, std::span<Element const> t)
{
  auto const &table = space.table();
  space.normalize(t);  // validates
  return tabulate(space, [&](Tuple a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = table.mul(a[i], t[i]);
    return a;
  });
}

Permutation perm_of_automorphism(DiagonalSpace const &space, ElementMap const &phi)
{
  if (!space.table().is_automorphism(phi))
    throw std::invalid_argument("perm_of_automorphism: map is not an automorphism of T");
  return tabulate(space, [&](Tuple a) {
    for (auto &x : a)
      x = phi[x];
    return a;
  });
}

Permutation perm_of_automorphism(DiagonalSpace const &space, Permutation const &phi)
{
  return perm_of_automorphism(space, space.table().conjugation_by(phi));
}

Permutation perm_of_top(DiagonalSpace const &space, Permutation const &sigma)
{
  if (sigma.degree() != space.factors())
    throw std::invalid_argument("perm_of_top: sigma must permute " +
                                std::to_string(space.factors()) + " coordinates");
  Permutation inverse = sigma.inverse();
  return tabulate(space, [&](Tuple const &a) {
    Tuple b(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      b[j] = a[inverse[j]];
    return b;
  });
}

PermGroup build_socle(DiagonalSpace const &space)
{
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < space.factors(); ++j) {
    for (auto const &t : factor_generators(space, j))
      gens.push_back(perm_of_socle(space, t));
  }
  return PermGroup(space.size(), std::move(gens));
}

PermGroup build_M(DiagonalSpace const &space)
{
  std::vector<Permutation> gens;
  for (std::size_t j = 1; j < space.factors(); ++j) {
    for (auto const &t : factor_generators(space, j))
      gens.push_back(perm_of_socle(space, t));
  }
  return PermGroup(space.size(), std::move(gens));
}

PermGroup build_factor(DiagonalSpace const &space, std::size_t j)
{
  if (j >= space.factors())
    throw std::invalid_argument("build_factor: no such factor");
  std::vector<Permutation> gens;
  for (auto const &t : factor_generators(space, j))
    gens.push_back(perm_of_socle(space, t));
  return PermGroup(space.size(), std::move(gens));
}

PermGroup build_W(DiagonalSpace const &space, std::vector<ElementMap> const &outer_reps)
{
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < space.factors(); ++j) {
    for (auto const &t : factor_generators(space, j))
      gens.push_back(perm_of_socle(space, t));
  }
  std::size_t k = space.factors();
  gens.push_back(perm_of_top(space, Permutation::from_cycles(k, {{0, 1}})));
  if (k > 2) {
    std::vector<Point> cycle(k);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(perm_of_top(space, Permutation::from_cycles(k, {cycle})));
  }
  for (auto const &phi : outer_reps)
    gens.push_back(perm_of_automorphism(space, phi));
  return PermGroup(space.size(), std::move(gens));
}

ComponentAction::ComponentAction(DiagonalSpace const &space)
: _space(&space)
{
  for (std::size_t j = 0; j < space.factors(); ++j)
    _factors.push_back(build_factor(space, j));
}

Permutation ComponentAction::operator()(Permutation const &g) const
{
  if (g.degree() != _space->size())
    throw std::invalid_argument("component action: wrong degree");
  std::size_t k = _factors.size();
  std::vector<Point> images(k);
  std::vector<char> used(k, 0);
  Permutation g_inv = g.inverse();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Permutation> conjugates;
    for (auto const &x : _factors[i].generators())
      conjugates.push_back(g_inv * x * g);
    bool found = false;
    for (std::size_t j = 0; j < k && !found; ++j) {
      if (used[j])
        continue;
      bool inside = true;
      for (auto const &c : conjugates) {
        if (!_factors[j].contains(c)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        images[i] = static_cast<Point>(j);
        used[j] = 1;
        found = true;
      }
    }
    if (!found)
      throw std::invalid_argument("component action: element does not permute the simple factors");
  }
  return Permutation(std::move(images));
}

FactoredElement ComponentAction::factor(Permutation const &g) const
{
  DiagonalSpace const &space = *_space;
  Permutation sigma = (*this)(g);

  Tuple m = space.tuple(g[DiagonalSpace::alpha()]);
  Permutation y = g * perm_of_socle(space, m).inverse();
  Permutation z = y * perm_of_top(space, sigma).inverse();

  // z fixes the diagonal and every factor; read it off on (1, a, 1, ..., 1).
  auto const &table = space.table();
  ElementMap phi(table.size());
  Tuple probe(space.factors(), ElementTable::identity());
  for (Element a = 0; a < table.size(); ++a) {
    probe[1] = a;
    phi[a] = space.tuple(z[space.point(probe)])[1];
  }
  if (!table.is_automorphism(phi) || perm_of_automorphism(space, phi) != z)
    throw std::invalid_argument("factor: element is not of the form sigma phi m");
  return {std::move(sigma), std::move(phi), std::move(m)};
}

Permutation factor_action_on_components(DiagonalSpace const &space, Permutation const &g)
{
  return ComponentAction(space)(g);
}

} // namespace twopoint
