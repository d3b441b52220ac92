#include "twopoint/function_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace twopoint
{

// CoordinateGroup ------------------------------------------------------------

CoordinateGroup::CoordinateGroup(std::size_t n, std::size_t k, std::vector<std::uint32_t> mul,
                                 std::vector<std::uint32_t> gens, bool cyclic)
: _n(n), _k(k), _size(1), _mul(std::move(mul)), _inv(n), _factor_generators(std::move(gens)),
  _cyclic(cyclic)
{
  if (k == 0 || n == 0)
    throw std::invalid_argument("coordinate group: empty");
  for (std::size_t i = 0; i < k; ++i) {
    _size *= n;
    if (_size > 1'000'000)
      throw Infeasible("coordinate group: more than 10^6 elements");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (_mul[a * n + b] == 0)
        _inv[a] = b;
    }
  }
}

CoordinateGroup CoordinateGroup::cyclic_power(std::uint32_t p, std::size_t k)
{
  if (p < 2)
    throw std::invalid_argument("coordinate group: modulus must be at least 2");
  std::vector<std::uint32_t> mul(p * p);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b)
      mul[a * p + b] = (a + b) % p;
  }
  return CoordinateGroup(p, k, std::move(mul), {1}, true);
}

CoordinateGroup CoordinateGroup::power(ElementTable const &a, std::size_t k)
{
  std::size_t n = a.size();
  std::vector<std::uint32_t> mul(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      mul[x * n + y] = a.mul(x, y);
  }
  auto gens = a.generator_indices();
  return CoordinateGroup(n, k, std::move(mul), std::vector<std::uint32_t>(gens.begin(), gens.end()),
                         false);
}

std::vector<std::uint32_t> CoordinateGroup::digits(Point x) const
{
  std::vector<std::uint32_t> d(_k);
  for (std::size_t i = 0; i < _k; ++i) {
    d[i] = static_cast<std::uint32_t>(x % _n);
    x = static_cast<Point>(x / _n);
  }
  return d;
}

Point CoordinateGroup::index(std::span<std::uint32_t const> digits) const
{
  if (digits.size() != _k)
    throw std::invalid_argument("coordinate group: wrong number of digits");
  std::size_t x = 0;
  for (std::size_t i = _k; i-- > 0;) {
    if (digits[i] >= _n)
      throw std::invalid_argument("coordinate group: digit out of range");
    x = x * _n + digits[i];
  }
  return static_cast<Point>(x);
}

Point CoordinateGroup::mul(Point a, Point b) const
{
  auto da = digits(a), db = digits(b);
  for (std::size_t i = 0; i < _k; ++i)
    da[i] = _mul[da[i] * _n + db[i]];
  return index(da);
}

Point CoordinateGroup::inv(Point a) const
{
  auto d = digits(a);
  for (auto &x : d)
    x = _inv[x];
  return index(d);
}

std::vector<Point> CoordinateGroup::generators() const
{
  std::vector<Point> gens;
  for (std::size_t i = 0; i < _k; ++i) {
    for (auto g : _factor_generators) {
      std::vector<std::uint32_t> d(_k, 0);
      d[i] = g;
      gens.push_back(index(d));
    }
  }
  return gens;
}

Permutation CoordinateGroup::right_translation(Point v) const
{
  std::vector<Point> images(_size);
  for (Point x = 0; x < _size; ++x)
    images[x] = mul(x, v);
  return Permutation(std::move(images));
}

Permutation CoordinateGroup::coordinate_permutation(Permutation const &pi) const
{
  if (pi.degree() != _k)
    throw std::invalid_argument("coordinate permutation: wrong degree");
  Permutation inverse = pi.inverse();
  std::vector<Point> images(_size);
  std::vector<std::uint32_t> out(_k);
  for (Point x = 0; x < _size; ++x) {
    auto d = digits(x);
    for (std::size_t j = 0; j < _k; ++j)
      out[j] = d[inverse[j]];
    images[x] = index(out);
  }
  return Permutation(std::move(images));
}

Permutation CoordinateGroup::linear_map(std::vector<std::vector<std::uint32_t>> const &matrix) const
{
  if (!_cyclic)
    throw std::invalid_argument("linear map: coordinate group is not a vector space");
  if (matrix.size() != _k)
    throw std::invalid_argument("linear map: wrong matrix size");
  std::vector<Point> images(_size);
  std::vector<std::uint32_t> out(_k);
  for (Point x = 0; x < _size; ++x) {
    auto d = digits(x);
    for (std::size_t j = 0; j < _k; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < _k; ++i)
        sum += std::uint64_t{d[i]} * matrix[i].at(j);
      out[j] = static_cast<std::uint32_t>(sum % _n);
    }
    images[x] = index(out);
  }
  // Throws if the matrix is singular.
  return Permutation(std::move(images));
}

// HomomorphismSpec -----------------------------------------------------------

HomomorphismSpec::HomomorphismSpec(CoordinateGroup const &v, ElementTable const &t,
                                   std::vector<Element> images, Budget &budget)
: _images(std::move(images))
{
  if (_images.size() != v.size())
    throw std::invalid_argument("homomorphism: one image per element required");
  for (Element e : _images) {
    if (e >= t.size())
      throw std::invalid_argument("homomorphism: image out of range");
  }

  auto fail = [] { throw PreconditionError("homomorphism: map is not multiplicative"); };
  std::uint64_t pairs = std::uint64_t{v.size()} * v.size();
  if (pairs <= budget.limit() - budget.used()) {
    budget.charge(pairs, "homomorphism check");
    for (Point a = 0; a < v.size(); ++a) {
      for (Point b = 0; b < v.size(); ++b) {
        if (_images[v.mul(a, b)] != t.mul(_images[a], _images[b]))
          fail();
      }
    }
  } else {
    // Multiplicativity against generators on the right implies it everywhere.
    for (Point g : v.generators()) {
      for (Point a = 0; a < v.size(); ++a) {
        if (_images[v.mul(a, g)] != t.mul(_images[a], _images[g]))
          fail();
      }
    }
  }
}

std::vector<Element> HomomorphismSpec::image_set() const
{
  std::vector<Element> out(_images);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> HomomorphismSpec::kernel() const
{
  std::vector<Point> out;
  for (Point v = 0; v < _images.size(); ++v) {
    if (_images[v] == ElementTable::identity())
      out.push_back(v);
  }
  return out;
}

// Function space -------------------------------------------------------------

FunctionSpace::FunctionSpace(std::shared_ptr<ElementTable const> t, std::size_t coordinates)
: _table(std::move(t)), _n(coordinates)
{
  if (!_table || _n == 0)
    throw std::invalid_argument("function space: needs a group and at least one coordinate");
}

FunctionPoint normalize(FunctionSpace const &space, std::vector<Element> values)
{
  if (values.size() != space.coordinates())
    throw std::invalid_argument("function point: wrong number of values");
  auto const &t = space.table();
  Element head = t.inv(values[FunctionSpace::basepoint()]);
  for (auto &x : values)
    x = t.mul(head, x);
  return {std::move(values)};
}

FunctionPoint diagonal_point(FunctionSpace const &space)
{
  return {std::vector<Element>(space.coordinates(), ElementTable::identity())};
}

ImplicitElement identity_element(FunctionSpace const &space)
{
  return {Permutation(space.coordinates()), space.table().identity_map(),
          std::vector<Element>(space.coordinates(), ElementTable::identity())};
}

ImplicitElement stabilizer_element(FunctionSpace const &space, Permutation const &sigma, Element t)
{
  if (sigma.degree() != space.coordinates())
    throw std::invalid_argument("stabilizer element: sigma has the wrong degree");
  return {sigma, space.table().inner(t),
          std::vector<Element>(space.coordinates(), ElementTable::identity())};
}

namespace
{

void check_element(FunctionSpace const &space, ImplicitElement const &g)
{
  if (g.sigma.degree() != space.coordinates() || g.m.size() != space.coordinates() ||
      g.phi.size() != space.table().size())
    throw std::invalid_argument("implicit element: shape does not match the space");
}

// (m^sigma)^phi
std::vector<Element> move_function(std::vector<Element> const &m, Permutation const &sigma,
                                   ElementMap const &phi)
{
  std::vector<Element> out(m.size());
  for (Point x = 0; x < m.size(); ++x)
    out[sigma[x]] = phi[m[x]];
  return out;
}

} // namespace

FunctionPoint act(FunctionSpace const &space, FunctionPoint const &f, ImplicitElement const &g)
{
  check_element(space, g);
  if (f.values.size() != space.coordinates())
    throw std::invalid_argument("act: point has the wrong number of values");
  auto values = move_function(f.values, g.sigma, g.phi);
  auto const &t = space.table();
  for (Point x = 0; x < values.size(); ++x)
    values[x] = t.mul(values[x], g.m[x]);
  return normalize(space, std::move(values));
}

ImplicitElement compose(FunctionSpace const &space, ImplicitElement const &a,
                        ImplicitElement const &b)
{
  check_element(space, a);
  check_element(space, b);
  auto m = move_function(a.m, b.sigma, b.phi);
  auto const &t = space.table();
  for (Point x = 0; x < m.size(); ++x)
    m[x] = t.mul(m[x], b.m[x]);
  return {a.sigma * b.sigma, compose_maps(a.phi, b.phi), std::move(m)};
}

ImplicitElement inverse(FunctionSpace const &space, ImplicitElement const &g)
{
  check_element(space, g);
  Permutation sigma = g.sigma.inverse();
  ElementMap phi = invert_map(g.phi);
  auto m = move_function(g.m, sigma, phi);
  for (auto &x : m)
    x = space.table().inv(x);
  return {std::move(sigma), std::move(phi), std::move(m)};
}

bool stabilizes(FunctionSpace const &space, FunctionPoint const &f, ImplicitElement const &g)
{
  return act(space, f, g) == f;
}

// Scans ----------------------------------------------------------------------

namespace
{

// Whether conjugation by t after sigma fixes the normalized point beta.
bool fixes(ElementTable const &table, std::vector<Element> const &beta,
           Permutation const &sigma_inverse, Element t)
{
  Point base = FunctionSpace::basepoint();
  Element head = table.inv(table.conj(beta[sigma_inverse[base]], t));
  for (Point x = 0; x < beta.size(); ++x) {
    if (table.mul(head, table.conj(beta[sigma_inverse[x]], t)) != beta[x])
      return false;
  }
  return true;
}

struct PointHash
{
  std::size_t operator()(std::vector<Element> const &v) const
  {
    std::size_t h = 1469598103934665603ull;
    for (Element e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

ScanResult two_point_stabilizer_scan(FunctionSpace const &space, FunctionPoint const &beta,
                                     CandidateFamily const &candidates, Budget &budget,
                                     unsigned threads)
{
  if (beta.values.size() != space.coordinates())
    throw std::invalid_argument("scan: point has the wrong number of values");
  std::vector<Permutation> inverses;
  for (auto const &s : candidates.sigmas) {
    if (s.degree() != space.coordinates())
      throw std::invalid_argument("scan: candidate permutation has the wrong degree");
    inverses.push_back(s.inverse());
  }

  auto const &table = space.table();
  std::size_t count = candidates.conjugators.size();
  auto cap = static_cast<unsigned>(std::max<std::size_t>(count, 1));
  threads = std::max(1u, std::min(threads, cap));
  std::vector<std::vector<StabilizerElement>> found(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < count; i += threads) {
        budget.charge(inverses.size(), "two-point stabilizer scan");
        Element t = candidates.conjugators[i];
        for (std::size_t j = 0; j < inverses.size(); ++j) {
          if (fixes(table, beta.values, inverses[j], t))
            found[id].push_back({t, candidates.sigmas[j]});
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id)
      pool.emplace_back(work, id);
    for (auto &th : pool)
      th.join();
  }
  for (auto const &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }

  ScanResult result;
  for (auto &part : found)
    result.elements.insert(result.elements.end(), part.begin(), part.end());
  std::sort(result.elements.begin(), result.elements.end());
  result.scanned = candidates.size();
  return result;
}

KernelScan plus_kernel_scan(FunctionSpace const &space, FunctionPoint const &beta,
                            std::vector<StabilizerElement> const &generators,
                            std::vector<StabilizerElement> const &two_point, Budget &budget)
{
  std::size_t n = space.coordinates();
  auto const &table = space.table();

  std::vector<ImplicitElement> gens;
  for (auto const &g : generators)
    gens.push_back(stabilizer_element(space, g.sigma, g.t));

  std::unordered_set<std::vector<Element>, PointHash> seen{beta.values};
  std::vector<std::vector<Element>> orbit{beta.values};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    budget.charge(n, "plus-kernel orbit");
    for (auto const &g : gens) {
      auto image = act(space, FunctionPoint{orbit[i]}, g).values;
      if (seen.insert(image).second)
        orbit.push_back(std::move(image));
    }
  }

  KernelScan result;
  result.orbit_length = orbit.size();
  for (auto const &x : two_point) {
    budget.charge(orbit.size(), "plus-kernel filter");
    Permutation inv = x.sigma.inverse();
    bool all = std::all_of(orbit.begin(), orbit.end(),
                           [&](auto const &p) { return fixes(table, p, inv, x.t); });
    if (all)
      result.elements.push_back(x);
  }
  std::sort(result.elements.begin(), result.elements.end());

  std::vector<char> hit(n, 0);
  std::size_t covered = 0;
  for (auto const &x : result.elements) {
    Point y = x.sigma[FunctionSpace::basepoint()];
    if (!hit[y]) {
      hit[y] = 1;
      ++covered;
    }
  }
  result.regular_on_coordinates = result.elements.size() == n && covered == n;
  return result;
}

FunctionPoint build_b_affine(FunctionSpace const &space, CoordinateGroup const &v,
                             HomomorphismSpec const &w, std::vector<Element> const &target)
{
  if (space.coordinates() != v.size())
    throw std::invalid_argument("b: the coordinates must be the elements of V");
  std::vector<Element> sorted(target);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (w.image_set() != sorted)
    throw PreconditionError("b: the homomorphism is not onto the target subgroup");

  std::vector<Element> values(v.size());
  for (Point x = 0; x < v.size(); ++x)
    values[x] = w(v.inv(x));
  return normalize(space, std::move(values));
}

FunctionPoint build_b_coordinate(FunctionSpace const &space, CoordinateGroup const &v,
                                 HomomorphismSpec const &w)
{
  if (space.coordinates() != v.size())
    throw std::invalid_argument("b: the coordinates must be the elements of V");
  std::vector<Element> values(v.size());
  for (Point x = 0; x < v.size(); ++x)
    values[x] = w(v.inv(x));
  return normalize(space, std::move(values));
}

} // namespace twopoint
