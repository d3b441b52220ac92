#ifndef TWOPOINT_ORBITAL_HPP
#define TWOPOINT_ORBITAL_HPP

#include <span>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

// The orbital graph of a transitive group: arcs are the G-orbit of (alpha, beta).
// Immutable once built.
class OrbitalGraph
{
public:
  static constexpr std::size_t max_degree = 100'000;

  // Throws std::invalid_argument if alpha == beta or G is intransitive,
  // Infeasible past max_degree or when the arcs exceed the budget.
  OrbitalGraph(PermGroup group, Point alpha, Point beta, Budget *budget = nullptr);

  PermGroup const &group() const { return _group; }
  Point alpha() const { return _alpha; }
  Point beta() const { return _beta; }
  std::size_t degree() const { return _out.size(); }
  std::size_t valency() const { return _out[_alpha].size(); }
  std::size_t arc_count() const { return degree() * valency(); }

  // Sorted.
  std::span<Point const> out(Point v) const { return _out[v]; }
  std::span<Point const> in(Point v) const { return _in[v]; }
  bool has_arc(Point a, Point b) const;

private:
  PermGroup _group;
  Point _alpha, _beta;
  std::vector<std::vector<Point>> _out, _in;
};

struct Suborbit
{
  Point representative;  // smallest point of the orbit
  std::size_t length;
  bool trivial;          // the orbit {alpha}
};

// Orbits of G_alpha, ordered by representative. Throws std::invalid_argument
// for intransitive G.
std::vector<Suborbit> suborbits(PermGroup const &g, Point alpha);

bool is_self_paired(OrbitalGraph const &gamma);

// Elements of G_alpha fixing every out-neighbour of alpha.
PermGroup plus_kernel(OrbitalGraph const &gamma);
// Elements of G_beta fixing every in-neighbour of beta.
PermGroup minus_kernel(OrbitalGraph const &gamma);

struct LocalGroup
{
  PermGroup group;            // on points 0..d-1
  std::vector<Point> points;  // point i of `group` is points[i] in the graph
};

// The group induced by G_alpha on the out-neighbours of alpha.
LocalGroup local_group(OrbitalGraph const &gamma);

struct Connectivity
{
  bool weak = false;
  bool strong = false;
};

Connectivity connectivity(OrbitalGraph const &gamma);
inline bool is_connected(OrbitalGraph const &gamma) { return connectivity(gamma).weak; }

} // namespace twopoint

#endif // TWOPOINT_ORBITAL_HPP
