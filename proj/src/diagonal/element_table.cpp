#include "twopoint/element_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace twopoint
{

ElementTable::ElementTable(PermGroup group, std::size_t max_size)
: _group(std::move(group))
{
  if (_group.order() > max_size)
    throw Infeasible("element table: |T| = " + std::to_string(_group.order()) +
                     " exceeds the table limit " + std::to_string(max_size));

  // Breadth-first closure, expanding each frontier in sorted order.
  std::set<Permutation> seen{Permutation(_group.degree())};
  std::vector<Permutation> frontier{Permutation(_group.degree())};
  while (!frontier.empty()) {
    std::set<Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &g : _group.generators()) {
        Permutation y = x * g;
        if (seen.insert(y).second)
          next.insert(y);
      }
    }
    frontier.assign(next.begin(), next.end());
  }

  _elements.assign(seen.begin(), seen.end());
  if (_elements.size() != _group.order())
    throw std::logic_error("element closure disagrees with the group order");

  for (std::size_t i = 0; i < _elements.size(); ++i)
    _index.emplace(_elements[i], static_cast<Element>(i));

  std::size_t n = _elements.size();
  _mul.resize(n * n);
  _inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = _index.at(_elements[a] * _elements[b]);
      _mul[a * n + b] = ab;
      if (ab == identity())
        _inv[a] = static_cast<Element>(b);
    }
  }
}

Element ElementTable::index_of(Permutation const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    throw std::invalid_argument("permutation " + p.to_string() + " is not in the table");
  return it->second;
}

std::vector<Element> ElementTable::generator_indices() const
{
  std::vector<Element> result;
  for (auto const &g : _group.generators())
    result.push_back(index_of(g));
  return result;
}

ElementMap ElementTable::identity_map() const
{
  ElementMap result(size());
  for (std::size_t a = 0; a < size(); ++a)
    result[a] = static_cast<Element>(a);
  return result;
}

ElementMap ElementTable::inner(Element t) const
{
  ElementMap result(size());
  for (std::size_t a = 0; a < size(); ++a)
    result[a] = conj(static_cast<Element>(a), t);
  return result;
}

ElementMap ElementTable::conjugation_by(Permutation const &phi) const
{
  if (phi.degree() != _group.degree())
    throw std::invalid_argument("automorphism degree does not match T");

  Permutation phi_inv = phi.inverse();
  ElementMap result(size());
  for (std::size_t a = 0; a < size(); ++a) {
    Permutation image = phi_inv * _elements[a] * phi;
    auto it = _index.find(image);
    if (it == _index.end())
      throw std::invalid_argument(phi.to_string() + " does not normalize T");
    result[a] = it->second;
  }
  return result;
}

bool ElementTable::is_automorphism(ElementMap const &phi) const
{
  if (phi.size() != size())
    return false;
  std::vector<bool> hit(size(), false);
  for (Element a : phi) {
    if (a >= size() || hit[a])
      return false;
    hit[a] = true;
  }
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (phi[mul(static_cast<Element>(a), static_cast<Element>(b))] != mul(phi[a], phi[b]))
        return false;
    }
  }
  return true;
}

bool ElementTable::is_inner(ElementMap const &phi) const
{
  for (std::size_t t = 0; t < size(); ++t) {
    if (inner(static_cast<Element>(t)) == phi)
      return true;
  }
  return false;
}

std::uint64_t ElementTable::element_order(Element a) const
{
  std::uint64_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a))
    ++k;
  return k;
}

ElementMap compose_maps(ElementMap const &first, ElementMap const &second)
{
  ElementMap result(first.size());
  for (std::size_t a = 0; a < first.size(); ++a)
    result[a] = second[first[a]];
  return result;
}

ElementMap invert_map(ElementMap const &phi)
{
  ElementMap result(phi.size());
  for (std::size_t a = 0; a < phi.size(); ++a)
    result[phi[a]] = static_cast<Element>(a);
  return result;
}

} // namespace twopoint
