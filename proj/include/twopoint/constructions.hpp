#ifndef TWOPOINT_CONSTRUCTIONS_HPP
#define TWOPOINT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/function_model.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

// r prime, r | p^k - 1 and r coprime to p^i - 1 for 0 < i < k.
bool is_primitive_prime_divisor(std::uint64_t p, std::uint64_t k, std::uint64_t r);

// V = (Z/p)^k with a cyclic group R of prime order r acting irreducibly, and
// H = V:R on the p^k vectors.
struct AffineModule
{
  std::uint32_t p = 0;
  std::size_t k = 0;
  std::uint32_t r = 0;
  CoordinateGroup v;
  std::vector<std::vector<std::uint32_t>> matrix;  // generates R, acting on row vectors
  Permutation r_generator;                         // the matrix as a permutation of V
  PermGroup r_group;
  PermGroup h;
};

// Throws PreconditionError if r is not a primitive prime divisor of p^k - 1
// or the matrix found does not act irreducibly.
AffineModule affine_module(std::uint32_t p, std::size_t k, std::uint32_t r);

// Whether the matrix group generated by `matrix` fixes no proper nonzero
// subspace of (Z/p)^k. Brute force over cyclic subspaces.
bool acts_irreducibly(CoordinateGroup const &v, Permutation const &linear_map);

class SpecError : public std::invalid_argument
{
public:
  SpecError(std::string const &message, std::size_t position);
  std::size_t position() const { return _position; }

private:
  std::size_t _position;
};

// Parsed group descriptor: Name(arg, ...), integer literals, or File(path).
struct SpecNode
{
  std::string name;  // empty for integer literals
  std::uint64_t number = 0;
  std::string path;  // File(...) only
  std::vector<SpecNode> args;
  std::size_t position = 0;

  std::string to_string() const;
};

SpecNode parse_group_spec(std::string_view text);

struct BuiltGroup
{
  PermGroup group;
  std::string description;
  // A regular normal subgroup, when the recipe provides one.
  std::optional<PermGroup> regular_normal;
  // Generators of the located Alt(5) for Cosets(G, Alt5).
  std::vector<Permutation> located;
};

// Builds a group from a descriptor. `seed` feeds the Alt(5) search.
BuiltGroup build_group(SpecNode const &spec, Budget &budget, std::uint64_t seed = 0);
BuiltGroup build_group(std::string_view spec, Budget &budget, std::uint64_t seed = 0);

} // namespace twopoint

#endif // TWOPOINT_CONSTRUCTIONS_HPP
