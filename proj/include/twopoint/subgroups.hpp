#ifndef TWOPOINT_SUBGROUPS_HPP
#define TWOPOINT_SUBGROUPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

enum class CentralizerMethod
{
  backtrack,
  enumeration
};

struct CentralizerResult
{
  PermGroup group;
  CentralizerMethod method;
  std::uint64_t nodes = 0;
};

// C_G(S) for S <= G. Backtracks over the stabilizer chain of G, propagating
// the forced images x^s -> (x^g)^s; if the search exceeds its share of the
// budget and |G| fits in what is left, every element is tested instead.
// Throws std::invalid_argument if S is not contained in G, Infeasible when
// neither route fits.
CentralizerResult centralizer(PermGroup const &g, PermGroup const &s, Budget &budget);

// The same by exhaustive filtering; a test oracle.
PermGroup centralizer_by_enumeration(PermGroup const &g, PermGroup const &s,
                                     Budget &budget);

// Throws std::invalid_argument if h is not a subgroup of g.
bool is_normal(PermGroup const &g, PermGroup const &h);

bool is_subgroup(PermGroup const &g, PermGroup const &h);

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &elements);

PermGroup derived_subgroup(PermGroup const &g);

bool is_perfect(PermGroup const &g);

struct CosetAction
{
  PermGroup image;
  // transversal[i] represents coset i; transversal[0] is the identity.
  std::vector<Permutation> transversal;
  // Images of g's generators, in order.
  std::vector<Permutation> generator_images;
};

// Action of g on the right cosets Hx of h (point 0 is h itself). Coset
// equality is decided by a canonical representative computed from h's chain
// along g's base. Charges one unit per coset.
CosetAction coset_action(PermGroup const &g, PermGroup const &h, Budget &budget);

// Image of x under the coset action (as a permutation of coset indices).
Permutation coset_image(PermGroup const &g, PermGroup const &h,
                        CosetAction const &action, Permutation const &x);

struct Alt5Search
{
  std::optional<PermGroup> group;
  Permutation a, b;
  std::uint64_t attempts = 0;
};

// Looks for a, b with |a| = 2, |b| = 3, |ab| = 5 generating a group of order
// 60 (hence isomorphic to Alt(5)). Deterministic for a given seed. A miss
// does not prove that no such subgroup exists.
Alt5Search find_alt5_subgroup(PermGroup const &g, std::uint64_t seed,
                              std::uint64_t max_attempts = 200000);

} // namespace twopoint

#endif // TWOPOINT_SUBGROUPS_HPP
