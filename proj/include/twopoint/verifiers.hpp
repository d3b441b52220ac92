#ifndef TWOPOINT_VERIFIERS_HPP
#define TWOPOINT_VERIFIERS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/constructions.hpp"
#include "twopoint/function_model.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

// Where an expected value comes from: stated in the source text, immediate
// from definitions, or computed independently.
enum class Provenance
{
  paper,
  trivial,
  derived
};

char const *to_string(Provenance p);
Provenance provenance_from_string(std::string const &s);

struct Claim
{
  std::string name;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::derived;
  bool pass = false;

  bool operator==(Claim const &) const = default;
};

struct VerificationReport
{
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Claim> claims;
  std::int64_t elapsed_ms = 0;

  bool pass() const;
  void param(std::string key, std::string value);
  // Passes when expected == actual.
  void add(std::string name, std::string expected, std::string actual, Provenance provenance);
  void add(std::string name, std::uint64_t expected, std::uint64_t actual, Provenance provenance);
  void add_true(std::string name, bool holds, Provenance provenance);

  bool operator==(VerificationReport const &) const = default;
};

// JSON with keys check, params, claims, elapsed_ms, pass (in that order).
std::string report_to_json(VerificationReport const &report, int indent = 2);
std::string reports_to_json(std::vector<VerificationReport> const &reports, int indent = 2);
// Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(std::string_view text);
// One line per claim, marked with a check or a cross.
std::string report_to_text(VerificationReport const &report);

enum class ScanMode
{
  fast,    // factorized scans only
  oracle,  // factorized and full scans, with an agreement claim
};

struct RunOptions
{
  ScanMode mode = ScanMode::fast;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool force = false;
};

// A transitive group with a regular normal subgroup: every orbital graph at
// alpha that is connected has trivial plus-kernel, and the elements of N
// carrying alpha to its out-neighbours generate N. Throws PreconditionError
// if N is not normal or not regular.
VerificationReport check_regular_normal(std::string const &name, PermGroup const &g,
                                        PermGroup const &n, Point alpha, Budget &budget);

// Full diagonal group on the cosets of the diagonal in T^factors, checked at
// the diagonal point against every suborbit (or only the first nontrivial one).
VerificationReport check_sd_dichotomy(std::string const &t_name, PermGroup const &t,
                                      std::size_t factors, bool all_suborbits, Budget &budget);

// The affine construction on T^V with V = (Z/p)^k.
struct AffineSetup
{
  AffineModule module;
  std::shared_ptr<ElementTable const> t;
  std::vector<Element> p_elements;
  FunctionSpace space;
  HomomorphismSpec w;
  FunctionPoint beta;
  std::vector<Permutation> v_elements;  // translations, indexed by vector
  std::vector<Permutation> r_elements;  // identity first
  std::vector<Permutation> h_elements;
  std::vector<StabilizerElement> g_alpha_generators;
};

AffineSetup make_affine_setup(std::uint32_t p, std::size_t k, std::uint32_t r, PermGroup const &t,
                              Permutation const &p_generator, Budget &budget);

VerificationReport check_affine(std::uint32_t p, std::size_t k, std::uint32_t r,
                                std::string const &t_name, PermGroup const &t,
                                Permutation const &p_generator, RunOptions const &options,
                                Budget &budget);

// The coordinate construction on T^V with V = A^m and H permuting coordinates.
struct CoordinateSetup
{
  std::shared_ptr<ElementTable const> a;
  std::shared_ptr<ElementTable const> t;
  CoordinateGroup v;
  PermGroup h;  // on m coordinates
  FunctionSpace space;
  HomomorphismSpec w;
  FunctionPoint beta;
  std::vector<Permutation> v_elements;  // right translations, indexed by element
  std::vector<Permutation> h_elements;  // coordinate permutations, identity first
  PermGroup l;                          // V:H on the elements of V
  std::vector<StabilizerElement> g_alpha_generators;
};

CoordinateSetup make_coordinate_setup(PermGroup const &a, std::size_t m, PermGroup const &h,
                                      PermGroup const &t, Budget &budget);

VerificationReport check_coordinate_miniature(std::string const &a_name, PermGroup const &a,
                                              std::size_t m, std::string const &h_name,
                                              PermGroup const &h, std::string const &t_name,
                                              PermGroup const &t, RunOptions const &options,
                                              Budget &budget);

VerificationReport check_ingredients(std::uint64_t p, RunOptions const &options, Budget &budget);

} // namespace twopoint

#endif // TWOPOINT_VERIFIERS_HPP
