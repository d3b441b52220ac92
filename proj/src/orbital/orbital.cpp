#include "twopoint/orbital.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <stdexcept>

namespace twopoint
{

namespace
{

void require_transitive(PermGroup const &g, char const *who)
{
  if (!g.is_transitive())
    throw std::invalid_argument(std::string(who) + ": group is not transitive");
}

std::size_t reach_count(std::vector<std::vector<Point>> const &adjacency, Point start)
{
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<Point> queue{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Point w : adjacency[queue[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size();
}

} // namespace

OrbitalGraph::OrbitalGraph(PermGroup group, Point alpha, Point beta, Budget *budget)
: _group(std::move(group)), _alpha(alpha), _beta(beta)
{
  std::size_t n = _group.degree();
  if (alpha >= n || beta >= n)
    throw std::invalid_argument("orbital graph: point out of range");
  if (alpha == beta)
    throw std::invalid_argument("orbital graph: the two points must be distinct");
  if (n > max_degree)
    throw Infeasible("orbital graph: degree " + std::to_string(n) + " exceeds " +
                     std::to_string(max_degree));
  require_transitive(_group, "orbital graph");

  // Out-neighbours of alpha form the G_alpha orbit of beta; every other vertex
  // is reached by a coset representative from a chain based at alpha.
  Point prefix[] = {alpha};
  PermGroup rebased = _group.with_base_prefix(prefix);
  auto const &top = rebased.level(0);
  std::vector<Point> star = rebased.stabilizer(alpha).orbit(beta);
  if (budget)
    budget->charge(n * star.size(), "orbital graph arcs");

  _out.assign(n, {});
  _in.assign(n, {});
  for (Point v = 0; v < n; ++v) {
    Permutation u = top.inverse_rep(v).inverse();
    auto &row = _out[v];
    row.reserve(star.size());
    for (Point d : star)
      row.push_back(u[d]);
    std::sort(row.begin(), row.end());
    for (Point w : row)
      _in[w].push_back(v);
  }
}

bool OrbitalGraph::has_arc(Point a, Point b) const
{
  auto const &row = _out.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Suborbit> suborbits(PermGroup const &g, Point alpha)
{
  require_transitive(g, "suborbits");
  std::vector<Suborbit> result;
  for (auto const &orbit : g.stabilizer(alpha).orbits())
    result.push_back({orbit.front(), orbit.size(), orbit.size() == 1 && orbit.front() == alpha});
  return result;
}

bool is_self_paired(OrbitalGraph const &gamma)
{
  return gamma.has_arc(gamma.beta(), gamma.alpha());
}

PermGroup plus_kernel(OrbitalGraph const &gamma)
{
  auto neighbours = gamma.out(gamma.alpha());
  return gamma.group().stabilizer(gamma.alpha()).pointwise_stabilizer(neighbours);
}

PermGroup minus_kernel(OrbitalGraph const &gamma)
{
  auto neighbours = gamma.in(gamma.beta());
  return gamma.group().stabilizer(gamma.beta()).pointwise_stabilizer(neighbours);
}

LocalGroup local_group(OrbitalGraph const &gamma)
{
  auto star = gamma.out(gamma.alpha());
  std::vector<Point> points(star.begin(), star.end());
  std::vector<std::int64_t> position(gamma.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i)
    position[points[i]] = static_cast<std::int64_t>(i);

  std::vector<Permutation> images;
  PermGroup stabilizer = gamma.group().stabilizer(gamma.alpha());
  for (auto const &x : stabilizer.strong_generators()) {
    std::vector<Point> image(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      image[i] = static_cast<Point>(position[x[points[i]]]);
    images.emplace_back(std::move(image));
  }
  return {PermGroup(points.size(), std::move(images)), std::move(points)};
}

Connectivity connectivity(OrbitalGraph const &gamma)
{
  std::size_t n = gamma.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (Point v = 0; v < n; ++v) {
    for (Point w : gamma.out(v)) {
      Point a = find(v), b = find(w);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }

  std::vector<std::vector<Point>> forward(n), backward(n);
  for (Point v = 0; v < n; ++v) {
    forward[v].assign(gamma.out(v).begin(), gamma.out(v).end());
    backward[v].assign(gamma.in(v).begin(), gamma.in(v).end());
  }
  bool strong = reach_count(forward, 0) == n && reach_count(backward, 0) == n;
  return {components == 1, strong};
}

} // namespace twopoint
