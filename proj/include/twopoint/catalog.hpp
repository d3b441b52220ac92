#ifndef TWOPOINT_CATALOG_HPP
#define TWOPOINT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "twopoint/perm_group.hpp"

namespace twopoint
{

bool is_prime(std::uint64_t n);

// Smallest generator of (Z/pZ)^*. p must be prime.
std::uint64_t primitive_root(std::uint64_t p);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
// Order 2n on n points.
PermGroup dihedral_group(std::size_t n);

// x -> x+1 and x -> gx on Z/pZ, g the smallest primitive root.
PermGroup affine_line_group(std::uint64_t p);
PermGroup affine_translations(std::uint64_t p);

// PSL_2(p) on the projective line: points 0..p-1 are F_p, point p is
// infinity. Generated by x -> x+1, x -> l^2 x (l a primitive root) and
// x -> -1/x.
PermGroup projective_special_linear(std::uint64_t p);

// T x T acting on T's elements by x -> a^-1 x b, extended by conjugation
// with `outer` when given (it must normalize T). Degree |T|.
struct HolomorphAction
{
  PermGroup group;
  // Right multiplications x -> x b: a regular normal subgroup.
  PermGroup right_regular;
  PermGroup left_regular;
};

HolomorphAction holomorph_simple(PermGroup const &t,
                                 std::optional<Permutation> const &outer);

// A transposition (0 1) when it normalizes but does not lie in T (as for
// Alt(n), n >= 3).
std::optional<Permutation> outer_transposition(PermGroup const &t);

} // namespace twopoint

#endif // TWOPOINT_CATALOG_HPP
