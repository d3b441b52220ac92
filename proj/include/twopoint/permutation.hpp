#ifndef TWOPOINT_PERMUTATION_HPP
#define TWOPOINT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twopoint
{

using Point = std::uint32_t;

// A bijection of {0..degree-1}, stored as its image sequence.
//
// Products follow the right-action convention: (p * q) applies p first and
// then q, so that point^(p*q) == (point^p)^q.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree);

  // Throws std::invalid_argument if images is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  // Disjoint-cycle notation, e.g. "(0 1 2)(3 4)" or "()" for the identity.
  // Commas between points are accepted as well as whitespace.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return _images.size(); }

  Point operator[](Point x) const { return _images[x]; }

  std::span<Point const> images() const { return _images; }

  bool is_identity() const;

  Permutation inverse() const;

  // Image of every point in `points`.
  std::vector<Point> apply(std::span<Point const> points) const;

  std::optional<Point> smallest_moved_point() const;

  std::uint64_t order() const;

  Permutation pow(std::int64_t exponent) const;

  std::vector<std::vector<Point>> cycles() const;

  std::string to_string() const;

  // Same degree, padded with fixed points.
  Permutation extended(std::size_t new_degree) const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs);

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked)
  : _images(std::move(images))
  {}

  friend Permutation operator*(Permutation const &lhs, Permutation const &rhs);

  std::vector<Point> _images;
};

// p then q. Throws std::invalid_argument on degree mismatch.
Permutation operator*(Permutation const &p, Permutation const &q);

inline Permutation compose(Permutation const &p, Permutation const &q)
{ return p * q; }

// g^-1 * h * g
Permutation conjugate(Permutation const &h, Permutation const &g);

bool commute(Permutation const &a, Permutation const &b);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace twopoint

#endif // TWOPOINT_PERMUTATION_HPP
