#include "twopoint/catalog.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "twopoint/element_table.hpp"
#include "twopoint/subgroups.hpp"

namespace twopoint
{

namespace
{

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 result = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1u)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1u;
  }
  return static_cast<std::uint64_t>(result);
}

void require_prime(std::uint64_t p, char const *who)
{
  if (!is_prime(p))
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

Permutation from_map(std::size_t n, auto &&f)
{
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x)
    images[x] = static_cast<Point>(f(x));
  return Permutation(std::move(images));
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p)
{
  require_prime(p, "primitive_root");
  if (p == 2)
    return 1;

  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    factors.push_back(m);

  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (power_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  throw std::logic_error("no primitive root found");
}

PermGroup symmetric_group(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("Sym(0) is not supported");
  if (n == 1)
    return PermGroup(1);
  if (n == 2)
    return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})});

  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n,
                   {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup alternating_group(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("Alt(0) is not supported");
  if (n < 3)
    return PermGroup(n);

  // 3-cycles (0 1 k) generate Alt(n); two generators suffice:
  // (0 1 2) with an n-cycle (n odd) or an (n-1)-cycle on 1..n-1 (n even).
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cycle;
    for (Point x = (n % 2 == 1) ? 0 : 1; x < n; ++x)
      cycle.push_back(x);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("Cyc(0) is not supported");
  return PermGroup(n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; })});
}

PermGroup dihedral_group(std::size_t n)
{
  if (n < 3)
    throw std::invalid_argument("Dih(n) needs n >= 3");
  return PermGroup(n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; }),
                       from_map(n, [n](std::size_t x) { return (n - x) % n; })});
}

PermGroup affine_line_group(std::uint64_t p)
{
  require_prime(p, "AGL1");
  std::uint64_t g = primitive_root(p);
  std::size_t n = p;
  return PermGroup(n, {from_map(n, [p](std::uint64_t x) { return (x + 1) % p; }),
                       from_map(n, [p, g](std::uint64_t x) { return (x * g) % p; })});
}

PermGroup affine_translations(std::uint64_t p)
{
  require_prime(p, "AGL1");
  return cyclic_group(p);
}

PermGroup projective_special_linear(std::uint64_t p)
{
  require_prime(p, "PSL2");
  if (p == 2)
    throw std::invalid_argument("PSL2: p must be odd");

  std::size_t n = p + 1;
  std::uint64_t const inf = p;
  std::uint64_t lambda = primitive_root(p);
  std::uint64_t square = lambda * lambda % p;

  auto translate = from_map(n, [&](std::uint64_t x) { return x == inf ? inf : (x + 1) % p; });
  auto scale = from_map(n, [&](std::uint64_t x) { return x == inf ? inf : (x * square) % p; });
  auto invert = from_map(n, [&](std::uint64_t x) -> std::uint64_t {
    if (x == inf)
      return 0;
    if (x == 0)
      return inf;
    // -1/x = -(x^(p-2))
    return (p - power_mod(x, p - 2, p)) % p;
  });

  return PermGroup(n, {translate, scale, invert});
}

std::optional<Permutation> outer_transposition(PermGroup const &t)
{
  if (t.degree() < 2)
    return std::nullopt;
  Permutation tau = Permutation::from_cycles(t.degree(), {{0, 1}});
  if (t.contains(tau))
    return std::nullopt;
  for (auto const &g : t.generators()) {
    if (!t.contains(conjugate(g, tau)))
      return std::nullopt;
  }
  return tau;
}

HolomorphAction holomorph_simple(PermGroup const &t, std::optional<Permutation> const &outer)
{
  ElementTable table(t);
  std::size_t n = table.size();
  auto gens = table.generator_indices();

  std::vector<Permutation> right, left;
  for (Element g : gens) {
    Element g_inv = table.inv(g);
    right.push_back(from_map(n, [&](std::size_t x) { return table.mul(Element(x), g); }));
    left.push_back(from_map(n, [&](std::size_t x) { return table.mul(g_inv, Element(x)); }));
  }

  std::vector<Permutation> all = right;
  all.insert(all.end(), left.begin(), left.end());
  if (outer) {
    ElementMap phi = table.conjugation_by(*outer);
    all.push_back(from_map(n, [&](std::size_t x) { return phi[x]; }));
  }

  return {PermGroup(n, std::move(all)), PermGroup(n, std::move(right)),
          PermGroup(n, std::move(left))};
}

} // namespace twopoint
