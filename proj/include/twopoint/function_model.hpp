#ifndef TWOPOINT_FUNCTION_MODEL_HPP
#define TWOPOINT_FUNCTION_MODEL_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/element_table.hpp"
#include "twopoint/perm_group.hpp"

namespace twopoint
{

// A direct power F^k of a small group F, elements numbered in mixed radix
// with coordinate 0 least significant; element 0 is the identity.
class CoordinateGroup
{
public:
  // (Z/p)^k; the digit of a coordinate is its value mod p.
  static CoordinateGroup cyclic_power(std::uint32_t p, std::size_t k);
  // a^k for a tabulated group a.
  static CoordinateGroup power(ElementTable const &a, std::size_t k);

  std::size_t size() const { return _size; }
  std::size_t coordinates() const { return _k; }
  std::size_t factor_order() const { return _n; }

  std::vector<std::uint32_t> digits(Point x) const;
  Point index(std::span<std::uint32_t const> digits) const;

  Point mul(Point a, Point b) const;
  Point inv(Point a) const;
  static constexpr Point identity() { return 0; }

  // One generator per coordinate and factor generator.
  std::vector<Point> generators() const;

  // x -> x v, a permutation of the elements.
  Permutation right_translation(Point v) const;
  // Coordinate j of the image is coordinate j^(pi^-1) of the source.
  Permutation coordinate_permutation(Permutation const &pi) const;
  // Row vector times matrix over Z/p (cyclic powers only).
  Permutation linear_map(std::vector<std::vector<std::uint32_t>> const &matrix) const;

private:
  CoordinateGroup(std::size_t n, std::size_t k, std::vector<std::uint32_t> mul,
                  std::vector<std::uint32_t> gens, bool cyclic);

  std::size_t _n, _k, _size;
  std::vector<std::uint32_t> _mul;  // factor multiplication table
  std::vector<std::uint32_t> _inv;
  std::vector<std::uint32_t> _factor_generators;
  bool _cyclic;
};

// A homomorphism from a coordinate group into T, tabulated.
class HomomorphismSpec
{
public:
  // Throws PreconditionError unless images[uv] == images[u] images[v] for
  // all u, v (exhaustive when |V|^2 fits the budget, else on generators).
  HomomorphismSpec(CoordinateGroup const &v, ElementTable const &t, std::vector<Element> images,
                   Budget &budget);

  Element operator()(Point v) const { return _images[v]; }
  std::vector<Element> const &images() const { return _images; }
  // Sorted distinct images.
  std::vector<Element> image_set() const;
  std::vector<Point> kernel() const;

private:
  std::vector<Element> _images;
};

// Omega = T^X / D, with X = {0..n-1} and basepoint 0. A coset is stored as its
// representative taking the value 1 at the basepoint.
class FunctionSpace
{
public:
  FunctionSpace(std::shared_ptr<ElementTable const> t, std::size_t coordinates);

  ElementTable const &table() const { return *_table; }
  std::shared_ptr<ElementTable const> const &table_ptr() const { return _table; }
  std::size_t coordinates() const { return _n; }
  static constexpr Point basepoint() { return 0; }

private:
  std::shared_ptr<ElementTable const> _table;
  std::size_t _n;
};

struct FunctionPoint
{
  std::vector<Element> values;
  bool operator==(FunctionPoint const &) const = default;
};

FunctionPoint normalize(FunctionSpace const &space, std::vector<Element> values);
// The diagonal coset D.
FunctionPoint diagonal_point(FunctionSpace const &space);

// x = sigma phi m acting as f -> (f^sigma)^phi m, then renormalized.
struct ImplicitElement
{
  Permutation sigma;  // on X
  ElementMap phi;
  std::vector<Element> m;

  bool operator==(ImplicitElement const &) const = default;
};

ImplicitElement identity_element(FunctionSpace const &space);
// The elements of the point stabilizer used by the scans: sigma on X together
// with conjugation by t.
ImplicitElement stabilizer_element(FunctionSpace const &space, Permutation const &sigma,
                                   Element t);

FunctionPoint act(FunctionSpace const &space, FunctionPoint const &f, ImplicitElement const &g);
ImplicitElement compose(FunctionSpace const &space, ImplicitElement const &a,
                        ImplicitElement const &b);
ImplicitElement inverse(FunctionSpace const &space, ImplicitElement const &g);
bool stabilizes(FunctionSpace const &space, FunctionPoint const &f, ImplicitElement const &g);

// Candidates (t, sigma) for t in `conjugators` and sigma in `sigmas`, acting
// as stabilizer_element(sigma, t).
struct CandidateFamily
{
  std::vector<Element> conjugators;
  std::vector<Permutation> sigmas;

  std::uint64_t size() const { return conjugators.size() * sigmas.size(); }
};

struct StabilizerElement
{
  Element t;
  Permutation sigma;

  auto operator<=>(StabilizerElement const &) const = default;
};

struct ScanResult
{
  std::vector<StabilizerElement> elements;  // sorted
  std::uint64_t scanned = 0;
  std::uint64_t order() const { return elements.size(); }
};

// The candidates fixing beta. Charges one unit per candidate; `threads` > 1
// splits the scan, with identical output.
ScanResult two_point_stabilizer_scan(FunctionSpace const &space, FunctionPoint const &beta,
                                     CandidateFamily const &candidates, Budget &budget,
                                     unsigned threads = 1);

struct KernelScan
{
  std::vector<StabilizerElement> elements;  // sorted
  std::size_t orbit_length = 0;
  bool regular_on_coordinates = false;
  std::uint64_t order() const { return elements.size(); }
};

// The orbit of beta under the group generated by `generators` (all of the
// stabilizer form), and the members of `two_point` fixing every point of it.
// Charges orbit length times |X|.
KernelScan plus_kernel_scan(FunctionSpace const &space, FunctionPoint const &beta,
                            std::vector<StabilizerElement> const &generators,
                            std::vector<StabilizerElement> const &two_point, Budget &budget);

// b(v) = w(-v) on X = V.
FunctionPoint build_b_affine(FunctionSpace const &space, CoordinateGroup const &v,
                             HomomorphismSpec const &w, std::vector<Element> const &target);
// b(v) = w(v^-1) on X = V.
FunctionPoint build_b_coordinate(FunctionSpace const &space, CoordinateGroup const &v,
                                 HomomorphismSpec const &w);

} // namespace twopoint

#endif // TWOPOINT_FUNCTION_MODEL_HPP
