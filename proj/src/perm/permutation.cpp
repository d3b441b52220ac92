#include "twopoint/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twopoint
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point y : _images) {
    if (y >= _images.size() || seen[y])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (used[x])
        throw std::invalid_argument("cycles are not disjoint at point " +
                                    std::to_string(x));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;

  auto fail = [&](std::string const &what) {
    throw std::invalid_argument("cycle notation error at position " +
                                std::to_string(pos) + ": " + what);
  };

  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    fail("empty permutation");

  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos == text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected point");

      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 0xffffffffu)
          fail("point too large");
        ++pos;
      }
      cycle.push_back(static_cast<Point>(value));
    }

    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip_ws();
  }

  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    inv[_images[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::vector<Point> Permutation::apply(std::span<Point const> points) const
{
  std::vector<Point> result;
  result.reserve(points.size());
  for (Point x : points)
    result.push_back(_images[x]);
  return result;
}

std::optional<Point> Permutation::smallest_moved_point() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return static_cast<Point>(i);
  }
  return std::nullopt;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

Permutation Permutation::pow(std::int64_t exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);

  Permutation result(degree());
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(_images.size(), false);

  for (std::size_t start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      ss << (i ? " " : "") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

Permutation Permutation::extended(std::size_t new_degree) const
{
  if (new_degree < degree())
    throw std::invalid_argument("cannot shrink a permutation");

  std::vector<Point> images(_images);
  for (std::size_t i = degree(); i < new_degree; ++i)
    images.push_back(static_cast<Point>(i));
  return Permutation(std::move(images), Unchecked{});
}

std::strong_ordering operator<=>(Permutation const &lhs, Permutation const &rhs)
{
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(lhs._images.begin(), lhs._images.end(),
                                                rhs._images.begin(), rhs._images.end());
}

Permutation operator*(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in permutation product (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");

  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q._images[p._images[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(Permutation const &h, Permutation const &g)
{
  return g.inverse() * h * g;
}

bool commute(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in commutation test");

  for (Point x = 0; x < a.degree(); ++x) {
    if (b[a[x]] != a[b[x]])
      return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace twopoint
