#ifndef TWOPOINT_ELEMENT_TABLE_HPP
#define TWOPOINT_ELEMENT_TABLE_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "twopoint/perm_group.hpp"

namespace twopoint
{

using Element = std::uint32_t;

// Automorphism of a tabulated group, as the induced map on element indices.
using ElementMap = std::vector<Element>;

// The elements of a small permutation group, enumerated by breadth-first
// closure and then ordered lexicographically by image sequence, with a full
// multiplication table. Index 0 is always the identity.
class ElementTable
{
public:
  static constexpr std::size_t default_max_size = 5040;

  explicit ElementTable(PermGroup group, std::size_t max_size = default_max_size);

  std::size_t size() const { return _elements.size(); }
  PermGroup const &group() const { return _group; }

  Permutation const &element(Element i) const { return _elements[i]; }
  // Throws std::invalid_argument if p is not in the group.
  Element index_of(Permutation const &p) const;
  bool contains(Permutation const &p) const { return _index.count(p) != 0; }

  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return _mul[a * size() + b]; }
  Element inv(Element a) const { return _inv[a]; }
  // t^-1 a t
  Element conj(Element a, Element t) const { return mul(inv(t), mul(a, t)); }

  std::vector<Element> generator_indices() const;

  ElementMap identity_map() const;
  // a -> t^-1 a t
  ElementMap inner(Element t) const;
  // a -> phi^-1 a phi for phi in the symmetric group on T's domain. Throws
  // std::invalid_argument unless phi normalizes T.
  ElementMap conjugation_by(Permutation const &phi) const;

  bool is_automorphism(ElementMap const &phi) const;
  bool is_inner(ElementMap const &phi) const;

  std::uint64_t element_order(Element a) const;

private:
  PermGroup _group;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, Element, PermutationHash> _index;
  std::vector<Element> _mul;
  std::vector<Element> _inv;
};

ElementMap compose_maps(ElementMap const &first, ElementMap const &second);
ElementMap invert_map(ElementMap const &phi);

} // namespace twopoint

#endif // TWOPOINT_ELEMENT_TABLE_HPP
