#ifndef TWOPOINT_PERM_GROUP_HPP
#define TWOPOINT_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/permutation.hpp"

namespace twopoint
{

namespace detail
{

// One level of a stabilizer chain: the base point, the strong generators
// fixing all earlier base points, and a Schreier structure for the orbit of
// the base point under those generators. Coset representatives are stored
// inverted since sifting only ever needs u^-1.
struct Level
{
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> generator_inverses;
  std::vector<Point> orbit;             // breadth-first discovery order
  std::vector<std::int32_t> rep_index;  // point -> index into inverse_reps, -1 if absent
  std::vector<Permutation> inverse_reps;

  bool in_orbit(Point x) const { return rep_index[x] >= 0; }
  Permutation const &inverse_rep(Point x) const { return inverse_reps[rep_index[x]]; }
};

} // namespace detail

struct Primitivity
{
  bool transitive = false;
  bool primitive = false;
  // A nontrivial block system witnessing imprimitivity (empty otherwise).
  std::vector<std::vector<Point>> blocks;
};

// A permutation group given by generators, with a base and strong generating
// set built by deterministic Schreier-Sims: new base points are the smallest
// point moved by the sifted residue, Schreier trees are grown breadth-first in
// generator order. Immutable once constructed.
class PermGroup
{
public:
  using Order = std::uint64_t;

  explicit PermGroup(std::size_t degree = 1, std::vector<Permutation> generators = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  std::vector<Permutation> const &strong_generators() const;
  std::vector<Point> base() const;

  // Exact; throws std::overflow_error past 2^64.
  Order order() const;
  bool is_trivial() const { return _levels.empty(); }

  // Throws std::invalid_argument on degree mismatch.
  bool contains(Permutation const &p) const;

  // Residue of p after sifting, and the level at which sifting stopped
  // (== base().size() when p sifted through every level).
  std::pair<Permutation, std::size_t> sift(Permutation const &p) const;

  // Sorted.
  std::vector<Point> orbit(Point x) const;
  // Sorted by smallest element.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  PermGroup stabilizer(Point x) const;
  PermGroup pointwise_stabilizer(std::span<Point const> points) const;
  // Group of all g with {a,b}^g = {a,b}.
  PermGroup setwise_pair_stabilizer(Point a, Point b) const;

  // The same group with a chain whose base starts with `prefix`.
  PermGroup with_base_prefix(std::span<Point const> prefix) const;

  // Some g with a^g == b, if one exists.
  std::optional<Permutation> transporter(Point a, Point b) const;

  Primitivity primitivity() const;
  bool is_primitive() const { return primitivity().primitive; }

  // Uniformly distributed.
  Permutation random_element(std::mt19937_64 &rng) const;

  // Visits every element; charges one unit per element.
  void for_each_element(std::function<void(Permutation const &)> const &visit,
                        Budget &budget) const;
  std::vector<Permutation> elements(Budget &budget) const;

  std::size_t base_length() const { return _levels.size(); }
  detail::Level const &level(std::size_t i) const { return *_levels[i]; }

  bool operator==(PermGroup const &other) const;

private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<std::shared_ptr<detail::Level const>> levels);

  PermGroup suffix(std::size_t first_level) const;

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<std::shared_ptr<detail::Level const>> _levels;
};

// Smallest block containing a and b for the group generated by `gens`.
std::vector<Point> minimal_block(std::span<Permutation const> gens, std::size_t degree,
                                 Point a, Point b);

} // namespace twopoint

#endif // TWOPOINT_PERM_GROUP_HPP
