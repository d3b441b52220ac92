#include "twopoint/constructions.hpp"

#include <cctype>
#include <numeric>

#include "twopoint/catalog.hpp"
#include "twopoint/diagonal.hpp"
#include "twopoint/generator_file.hpp"
#include "twopoint/subgroups.hpp"

namespace twopoint
{

namespace
{

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 result = 1 % mod, b = base % mod;
  while (exp > 0) {
    if (exp & 1u)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1u;
  }
  return static_cast<std::uint64_t>(result);
}

} // namespace

bool is_primitive_prime_divisor(std::uint64_t p, std::uint64_t k, std::uint64_t r)
{
  if (!is_prime(r) || k == 0)
    return false;
  if (power_mod(p, k, r) != 1)
    return false;
  for (std::uint64_t i = 1; i < k; ++i) {
    if (power_mod(p, i, r) == 1)
      return false;
  }
  return true;
}

bool acts_irreducibly(CoordinateGroup const &v, Permutation const &linear_map)
{
  std::size_t n = v.size();
  std::vector<char> seen(n);
  for (Point x = 1; x < n; ++x) {
    std::vector<Point> orbit{x};
    for (Point y = linear_map[x]; y != x; y = linear_map[y])
      orbit.push_back(y);

    // Span of the orbit: closure of {0} under adding orbit vectors.
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Point> queue{CoordinateGroup::identity()};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Point g : orbit) {
        Point z = v.mul(queue[i], g);
        if (!seen[z]) {
          seen[z] = 1;
          queue.push_back(z);
        }
      }
    }
    if (queue.size() != n)
      return false;
  }
  return true;
}

AffineModule affine_module(std::uint32_t p, std::size_t k, std::uint32_t r)
{
  if (!is_prime(p))
    throw PreconditionError("affine module: " + std::to_string(p) + " is not prime");
  if (!is_primitive_prime_divisor(p, k, r))
    throw PreconditionError("affine module: " + std::to_string(r) +
                            " is not a primitive prime divisor of " + std::to_string(p) + "^" +
                            std::to_string(k) + " - 1");

  CoordinateGroup v = CoordinateGroup::cyclic_power(p, k);

  // Companion matrices of x^k + c_(k-1) x^(k-1) + ... + c_0, in order of the
  // coefficient vector read as a base-p number; the first of order r wins.
  std::vector<std::vector<std::uint32_t>> matrix;
  Permutation generator;
  bool found = false;
  for (Point code = 0; code < v.size() && !found; ++code) {
    auto c = v.digits(code);
    if (c[0] == 0)
      continue;
    std::vector<std::vector<std::uint32_t>> m(k, std::vector<std::uint32_t>(k, 0));
    for (std::size_t i = 0; i + 1 < k; ++i)
      m[i][i + 1] = 1;
    for (std::size_t j = 0; j < k; ++j)
      m[k - 1][j] = (p - c[j]) % p;
    Permutation g = v.linear_map(m);
    if (g.order() == r) {
      matrix = std::move(m);
      generator = std::move(g);
      found = true;
    }
  }
  if (!found)
    throw PreconditionError("affine module: no companion matrix of order " + std::to_string(r));
  if (!acts_irreducibly(v, generator))
    throw PreconditionError("affine module: the cyclic group of order " + std::to_string(r) +
                            " is reducible");

  std::vector<Permutation> gens;
  for (Point g : v.generators())
    gens.push_back(v.right_translation(g));
  gens.push_back(generator);
  PermGroup h(v.size(), std::move(gens));
  PermGroup r_group(v.size(), {generator});
  return {p, k, r, std::move(v), std::move(matrix), std::move(generator), std::move(r_group),
          std::move(h)};
}

// Group descriptors ----------------------------------------------------------

SpecError::SpecError(std::string const &message, std::size_t position)
: std::invalid_argument("group spec: " + message + " at position " + std::to_string(position)),
  _position(position)
{}

std::string SpecNode::to_string() const
{
  if (name.empty())
    return std::to_string(number);
  if (name == "File")
    return "File(" + path + ")";
  std::string out = name;
  if (!args.empty() || name != "Alt5") {
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i)
      out += (i ? "," : "") + args[i].to_string();
    out += ")";
  }
  return out;
}

namespace
{

class Parser
{
public:
  explicit Parser(std::string_view text)
  : _text(text)
  {}

  SpecNode parse()
  {
    SpecNode node = node_();
    skip();
    if (_pos != _text.size())
      throw SpecError("unexpected '" + std::string(1, _text[_pos]) + "'", _pos);
    return node;
  }

private:
  void skip()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool peek(char c)
  {
    skip();
    return _pos < _text.size() && _text[_pos] == c;
  }

  void expect(char c)
  {
    if (!peek(c))
      throw SpecError(std::string("expected '") + c + "'", _pos);
    ++_pos;
  }

  SpecNode node_()
  {
    skip();
    SpecNode node;
    node.position = _pos;
    if (_pos >= _text.size())
      throw SpecError("unexpected end of input", _pos);

    if (std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      std::uint64_t value = 0;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        if (value > (UINT64_MAX - 9) / 10)
          throw SpecError("number too large", node.position);
        value = value * 10 + static_cast<std::uint64_t>(_text[_pos++] - '0');
      }
      node.number = value;
      return node;
    }

    while (_pos < _text.size() && std::isalnum(static_cast<unsigned char>(_text[_pos])))
      node.name += _text[_pos++];
    if (node.name.empty())
      throw SpecError("expected a group name or a number", _pos);
    if (!peek('('))
      return node;
    ++_pos;

    if (node.name == "File") {
      std::size_t close = _text.find(')', _pos);
      if (close == std::string_view::npos)
        throw SpecError("unterminated File(...)", node.position);
      std::string path(_text.substr(_pos, close - _pos));
      auto first = path.find_first_not_of(" \t");
      auto last = path.find_last_not_of(" \t");
      node.path = first == std::string::npos ? "" : path.substr(first, last - first + 1);
      _pos = close + 1;
      return node;
    }

    if (!peek(')')) {
      node.args.push_back(node_());
      while (peek(',')) {
        ++_pos;
        node.args.push_back(node_());
      }
    }
    expect(')');
    return node;
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

std::uint64_t number_arg(SpecNode const &node, std::size_t i, std::uint64_t at_least = 1)
{
  if (i >= node.args.size())
    throw SpecError(node.name + " needs argument " + std::to_string(i + 1), node.position);
  auto const &a = node.args[i];
  if (!a.name.empty())
    throw SpecError("expected a number", a.position);
  if (a.number < at_least)
    throw SpecError("argument must be at least " + std::to_string(at_least), a.position);
  return a.number;
}

void arity(SpecNode const &node, std::size_t n)
{
  if (node.args.size() != n)
    throw SpecError(node.name + " takes " + std::to_string(n) + " argument(s)", node.position);
}

std::uint64_t prime_arg(SpecNode const &node, std::size_t i)
{
  auto p = number_arg(node, i, 2);
  if (!is_prime(p))
    throw SpecError(std::to_string(p) + " is not prime", node.args[i].position);
  return p;
}

PermGroup subgroup_for_cosets(PermGroup const &g, SpecNode const &sub, Budget &budget,
                              std::uint64_t seed, std::vector<Permutation> &located)
{
  if (sub.name == "Alt5" && sub.args.empty()) {
    auto search = find_alt5_subgroup(g, seed);
    if (!search.group)
      throw SpecError("no Alt(5) subgroup found", sub.position);
    located = {search.a, search.b};
    return *search.group;
  }
  if (sub.name == "Stab") {
    std::vector<Point> points;
    for (std::size_t i = 0; i < sub.args.size(); ++i) {
      auto x = number_arg(sub, i, 0);
      if (x >= g.degree())
        throw SpecError("point out of range", sub.args[i].position);
      points.push_back(static_cast<Point>(x));
    }
    return g.pointwise_stabilizer(points);
  }

  PermGroup h = build_group(sub, budget, seed).group;
  if (h.degree() > g.degree())
    throw SpecError("subgroup acts on more points than the group", sub.position);
  std::vector<Permutation> gens;
  for (auto const &x : h.generators())
    gens.push_back(x.extended(g.degree()));
  PermGroup padded(g.degree(), std::move(gens));
  if (!is_subgroup(g, padded))
    throw SpecError("not a subgroup of the acting group", sub.position);
  return padded;
}

} // namespace

SpecNode parse_group_spec(std::string_view text) { return Parser(text).parse(); }

BuiltGroup build_group(std::string_view spec, Budget &budget, std::uint64_t seed)
{
  return build_group(parse_group_spec(spec), budget, seed);
}

BuiltGroup build_group(SpecNode const &spec, Budget &budget, std::uint64_t seed)
{
  auto const &name = spec.name;
  std::string desc = spec.to_string();
  try {
    if (name == "Sym" || name == "Alt" || name == "Cyc" || name == "Dih") {
      arity(spec, 1);
      auto n = number_arg(spec, 0, name == "Dih" ? 3 : 1);
      if (n > 100'000)
        throw SpecError("degree too large", spec.args[0].position);
      if (name == "Sym")
        return {symmetric_group(n), desc, std::nullopt, {}};
      if (name == "Alt")
        return {alternating_group(n), desc, std::nullopt, {}};
      if (name == "Cyc") {
        auto c = cyclic_group(n);
        return {c, desc, c, {}};
      }
      PermGroup rotations = cyclic_group(n);
      return {dihedral_group(n), desc, rotations, {}};
    }
    if (name == "AGL1") {
      arity(spec, 1);
      auto p = prime_arg(spec, 0);
      return {affine_line_group(p), desc, affine_translations(p), {}};
    }
    if (name == "PSL2") {
      arity(spec, 1);
      auto p = prime_arg(spec, 0);
      if (p == 2)
        throw SpecError("PSL2 needs an odd prime", spec.args[0].position);
      return {projective_special_linear(p), desc, std::nullopt, {}};
    }
    if (name == "HS") {
      arity(spec, 1);
      PermGroup t = build_group(spec.args[0], budget, seed).group;
      auto hol = holomorph_simple(t, outer_transposition(t));
      return {hol.group, desc, hol.right_regular, {}};
    }
    if (name == "Diag") {
      arity(spec, 2);
      PermGroup t = build_group(spec.args[0], budget, seed).group;
      auto m = number_arg(spec, 1, 2);
      DiagonalSpace space(t, m - 1);
      std::vector<ElementMap> outer;
      if (auto tau = outer_transposition(t))
        outer.push_back(space.table().conjugation_by(*tau));
      return {build_W(space, outer), desc, std::nullopt, {}};
    }
    if (name == "Cosets") {
      arity(spec, 2);
      PermGroup g = build_group(spec.args[0], budget, seed).group;
      std::vector<Permutation> located;
      PermGroup h = subgroup_for_cosets(g, spec.args[1], budget, seed, located);
      auto action = coset_action(g, h, budget);
      return {action.image, desc, std::nullopt, located};
    }
    if (name == "File") {
      auto list = read_generator_file(spec.path);
      return {PermGroup(list.degree, list.generators), desc, std::nullopt, {}};
    }
  } catch (SpecError const &) {
    throw;
  } catch (Infeasible const &) {
    throw;
  } catch (std::invalid_argument const &e) {
    throw SpecError(std::string(name) + ": " + e.what(), spec.position);
  }
  if (name.empty())
    throw SpecError("expected a group, found a number", spec.position);
  throw SpecError("unknown group '" + name + "'", spec.position);
}

} // namespace twopoint
