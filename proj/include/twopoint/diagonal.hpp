#ifndef TWOPOINT_DIAGONAL_HPP
#define TWOPOINT_DIAGONAL_HPP

#include <span>
#include <vector>

#include "twopoint/element_table.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

// Tuple (t_0, ..., t_ell) of elements of T, by table index.
using Tuple = std::vector<Element>;

// The cosets of the diagonal in T^(ell+1). A coset is stored by its
// representative with first coordinate 1, and numbered by reading
// (t_1, ..., t_ell) as a mixed-radix integer with t_1 least significant.
// The diagonal itself is point 0.
class DiagonalSpace
{
public:
  static constexpr std::size_t max_points = 1'000'000;

  // Throws Infeasible if |T|^ell exceeds max_points, std::invalid_argument
  // if ell == 0.
  DiagonalSpace(PermGroup t, std::size_t ell);

  ElementTable const &table() const { return _table; }
  std::size_t ell() const { return _ell; }
  std::size_t factors() const { return _ell + 1; }
  std::size_t size() const { return _size; }
  static constexpr Point alpha() { return 0; }

  // (1, t_0^-1 t_1, ..., t_0^-1 t_ell)
  Tuple normalize(std::span<Element const> tuple) const;
  // Index of the coset of `tuple` (length ell+1, need not be normalized).
  Point point(std::span<Element const> tuple) const;
  // Normalized representative, length ell+1.
  Tuple tuple(Point x) const;

private:
  void check_tuple(std::span<Element const> tuple) const;

  ElementTable _table;
  std::size_t _ell;
  std::size_t _size;
};

// Action of a socle element (t_0, ..., t_ell).
Permutation perm_of_socle(DiagonalSpace const &space, std::span<Element const> t);
// Coordinatewise action of an automorphism of T.
Permutation perm_of_automorphism(DiagonalSpace const &space, ElementMap const &phi);
// Same, for phi given as a permutation normalizing T.
Permutation perm_of_automorphism(DiagonalSpace const &space, Permutation const &phi);
// Coordinate permutation: coordinate j of the image is coordinate j^(sigma^-1)
// of the source, so that this is a right action. sigma has degree ell+1.
Permutation perm_of_top(DiagonalSpace const &space, Permutation const &sigma);

// The socle T^(ell+1).
PermGroup build_socle(DiagonalSpace const &space);
// The socle elements with t_0 = 1; regular on the space.
PermGroup build_M(DiagonalSpace const &space);
// The j-th simple direct factor of the socle.
PermGroup build_factor(DiagonalSpace const &space, std::size_t j);
// Socle, all coordinate permutations and the given automorphisms (inner
// ones come from the socle already).
PermGroup build_W(DiagonalSpace const &space, std::vector<ElementMap> const &outer_reps);

// x = sigma phi m with sigma a coordinate permutation, phi an automorphism of
// T and m = (1, m_1, ..., m_ell).
struct FactoredElement
{
  Permutation sigma;
  ElementMap phi;
  Tuple m;
};

// Precomputed simple factors for recovering how elements permute them.
class ComponentAction
{
public:
  explicit ComponentAction(DiagonalSpace const &space);

  // The permutation sigma of {0..ell} with g^-1 T_i g = T_(i^sigma). Throws
  // std::invalid_argument if g does not permute the factors (so g is not in W).
  Permutation operator()(Permutation const &g) const;

  // Throws std::invalid_argument if g is not of the form sigma phi m.
  FactoredElement factor(Permutation const &g) const;

private:
  DiagonalSpace const *_space;
  std::vector<PermGroup> _factors;
};

Permutation factor_action_on_components(DiagonalSpace const &space, Permutation const &g);

} // namespace twopoint

#endif // TWOPOINT_DIAGONAL_HPP
