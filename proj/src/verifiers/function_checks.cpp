#include <algorithm>

#include "common.hpp"
#include "twopoint/subgroups.hpp"
#include "twopoint/verifiers.hpp"

namespace twopoint
{

namespace
{

std::vector<StabilizerElement> stabilizer_generators(ElementTable const &t,
                                                     std::vector<Permutation> const &sigmas,
                                                     std::size_t coordinates)
{
  std::vector<StabilizerElement> gens;
  for (Element g : t.generator_indices())
    gens.push_back({g, Permutation(coordinates)});
  for (auto const &s : sigmas)
    gens.push_back({ElementTable::identity(), s});
  return gens;
}

std::vector<Element> all_elements(ElementTable const &t)
{
  std::vector<Element> out(t.size());
  for (Element i = 0; i < t.size(); ++i)
    out[i] = i;
  return out;
}

// The products c v for c in `complement` and v in `translations`, sorted. G_a
// is T x H with the two factors commuting, so the product is componentwise.
std::vector<StabilizerElement> product_with(std::vector<StabilizerElement> const &complement,
                                            std::vector<Permutation> const &translations)
{
  std::vector<StabilizerElement> out;
  for (auto const &c : complement) {
    for (auto const &v : translations)
      out.push_back({c.t, c.sigma * v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_translation_set(std::vector<StabilizerElement> const &elements,
                        std::vector<Permutation> const &translations)
{
  std::vector<StabilizerElement> expected;
  for (auto const &v : translations)
    expected.push_back({ElementTable::identity(), v});
  std::sort(expected.begin(), expected.end());
  return elements == expected;
}

std::size_t count_fixing(FunctionSpace const &space, FunctionPoint const &beta,
                         std::vector<Permutation> const &sigmas)
{
  return static_cast<std::size_t>(std::count_if(sigmas.begin(), sigmas.end(), [&](auto const &s) {
    return stabilizes(space, beta, stabilizer_element(space, s, ElementTable::identity()));
  }));
}

// Sub-claims shared with the diagonal check, for a kernel made of translations.
void top_kernel_claims(VerificationReport &report, FunctionSpace const &space,
                       FunctionPoint const &beta, KernelScan const &kernel)
{
  bool meets_aut_trivially = true, in_top = true;
  std::vector<Permutation> sigmas;
  for (auto const &x : kernel.elements) {
    bool top = x.t == ElementTable::identity();
    in_top = in_top && top;
    if (x.sigma.is_identity() && !top)
      meets_aut_trivially = false;
    sigmas.push_back(x.sigma);
  }
  report.add_true("K meets Aut(T) trivially", meets_aut_trivially, Provenance::paper);
  report.add_true("K lies in the coordinate permutations", in_top, Provenance::paper);
  report.add_true("K regular on coordinates", kernel.regular_on_coordinates, Provenance::paper);
  report.add_true("sigma -> b(0^(sigma^-1)) is a homomorphism on all pairs",
                  detail::top_homomorphism(space.table(), beta.values, sigmas),
                  Provenance::paper);
}

std::string mode_name(ScanMode m) { return m == ScanMode::fast ? "fast" : "oracle"; }

} // namespace

// Affine construction --------------------------------------------------------

AffineSetup make_affine_setup(std::uint32_t p, std::size_t k, std::uint32_t r, PermGroup const &t,
                              Permutation const &p_generator, Budget &budget)
{
  AffineModule module = affine_module(p, k, r);
  auto table = std::make_shared<ElementTable const>(t);
  if (p_generator.degree() != t.degree() || !table->contains(p_generator))
    throw PreconditionError("affine: the generator of P is not in T");
  if (p_generator.order() != p)
    throw PreconditionError("affine: P does not have order p");

  std::vector<Element> powers;
  Permutation x(t.degree());
  for (std::uint32_t i = 0; i < p; ++i) {
    powers.push_back(table->index_of(x));
    x = x * p_generator;
  }

  // w(v) = g^(v_0), onto P with kernel the hyperplane v_0 = 0.
  std::vector<Element> images(module.v.size());
  for (Point v = 0; v < module.v.size(); ++v)
    images[v] = powers[module.v.digits(v)[0]];
  HomomorphismSpec w(module.v, *table, std::move(images), budget);

  FunctionSpace space(table, module.v.size());
  FunctionPoint beta = build_b_affine(space, module.v, w, powers);

  std::vector<Permutation> v_elements, r_elements;
  for (Point v = 0; v < module.v.size(); ++v)
    v_elements.push_back(module.v.right_translation(v));
  Permutation y(module.v.size());
  for (std::uint32_t i = 0; i < r; ++i) {
    r_elements.push_back(y);
    y = y * module.r_generator;
  }
  auto h_elements = module.h.elements(budget);
  std::sort(h_elements.begin(), h_elements.end());
  auto gens = stabilizer_generators(*table, module.h.generators(), module.v.size());

  std::sort(powers.begin(), powers.end());
  return {std::move(module), std::move(table), std::move(powers), std::move(space),
          std::move(w), std::move(beta), std::move(v_elements), std::move(r_elements),
          std::move(h_elements), std::move(gens)};
}

VerificationReport check_affine(std::uint32_t p, std::size_t k, std::uint32_t r,
                                std::string const &t_name, PermGroup const &t,
                                Permutation const &p_generator, RunOptions const &options,
                                Budget &budget)
{
  detail::Stopwatch clock;
  auto s = make_affine_setup(p, k, r, t, p_generator, budget);
  auto const &table = *s.t;
  PermGroup pg(t.degree(), {p_generator});
  if (!(centralizer(t, pg, budget).group == pg))
    throw PreconditionError("affine: C_T(P) is not P");

  VerificationReport report;
  report.check = "ex42";
  report.param("p", std::to_string(p));
  report.param("k", std::to_string(k));
  report.param("r", std::to_string(r));
  report.param("T", t_name);
  report.param("P", p_generator.to_string());
  report.param("mode", mode_name(options.mode));

  std::uint64_t v_order = s.v_elements.size();
  std::uint64_t g_alpha = table.size() * s.h_elements.size();

  report.add("translations by V fixing beta", v_order, count_fixing(s.space, s.beta, s.v_elements),
             Provenance::paper);

  auto ker = s.w.kernel();
  std::size_t preserving = 0;
  for (auto const &h : s.r_elements) {
    auto image = h.apply(ker);
    std::sort(image.begin(), image.end());
    if (image == ker)
      ++preserving;
  }
  report.add("elements of R leaving Ker(w) invariant", 1, preserving, Provenance::paper);

  CandidateFamily complement_family{all_elements(table), s.r_elements};
  auto complement = two_point_stabilizer_scan(s.space, s.beta, complement_family, budget,
                                              options.threads);
  std::vector<StabilizerElement> p_set;
  for (Element e : s.p_elements)
    p_set.push_back({e, Permutation(s.v_elements.size())});
  std::sort(p_set.begin(), p_set.end());
  report.add("G_ab meet T x R", "P (order " + std::to_string(p) + ")",
             complement.elements == p_set
                 ? "P (order " + std::to_string(p) + ")"
                 : "order " + std::to_string(complement.order()) + ", not P",
             Provenance::paper);

  auto two_point = product_with(complement.elements, s.v_elements);
  std::uint64_t pv = 1;
  for (std::size_t i = 0; i <= k; ++i)
    pv *= p;
  report.add("|G_ab| = |P x V|", pv, two_point.size(), Provenance::paper);

  if (options.mode == ScanMode::oracle) {
    CandidateFamily full{all_elements(table), s.h_elements};
    auto scan = two_point_stabilizer_scan(s.space, s.beta, full, budget, options.threads);
    report.add_true("full scan over T x H agrees with P x V", scan.elements == two_point,
                    Provenance::derived);
  }

  auto kernel = plus_kernel_scan(s.space, s.beta, s.g_alpha_generators, two_point, budget);
  report.add("|beta^(G_a)| = |G_a| / |G_ab|", g_alpha / two_point.size(), kernel.orbit_length,
             Provenance::derived);
  report.add("|G_a^{+[1]}| = |V|", v_order, kernel.order(), Provenance::paper);
  report.add_true("G_a^{+[1]} = V", is_translation_set(kernel.elements, s.v_elements),
                  Provenance::paper);
  report.add("|G_ab : G_a^{+[1]}| = p", p,
             kernel.order() ? two_point.size() / kernel.order() : 0, Provenance::paper);
  top_kernel_claims(report, s.space, s.beta, kernel);

  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// Coordinate construction ----------------------------------------------------

CoordinateSetup make_coordinate_setup(PermGroup const &a, std::size_t m, PermGroup const &h,
                                      PermGroup const &t, Budget &budget)
{
  if (m < 2)
    throw PreconditionError("miniature: at least two coordinates required");
  if (h.degree() != m)
    throw PreconditionError("miniature: H must act on the coordinates");
  std::size_t d = a.degree();
  if (t.degree() < 2 * d)
    throw PreconditionError("miniature: T is too small to contain A x A");

  auto a_table = std::make_shared<ElementTable const>(a);
  auto t_table = std::make_shared<ElementTable const>(t);

  // A x A on {0..d-1} and {d..2d-1}.
  auto embed = [&](Element x, std::size_t shift) {
    std::vector<Point> images(t.degree());
    for (Point i = 0; i < t.degree(); ++i)
      images[i] = i;
    auto const &px = a_table->element(x);
    for (Point i = 0; i < d; ++i)
      images[i + shift] = static_cast<Point>(px[i] + shift);
    return Permutation(std::move(images));
  };
  std::vector<Element> first(a_table->size()), second(a_table->size());
  for (Element x = 0; x < a_table->size(); ++x) {
    auto e1 = embed(x, 0), e2 = embed(x, d);
    if (!t_table->contains(e1) || !t_table->contains(e2))
      throw PreconditionError("miniature: A x A does not embed in T");
    first[x] = t_table->index_of(e1);
    second[x] = t_table->index_of(e2);
  }

  CoordinateGroup v = CoordinateGroup::power(*a_table, m);
  // w(v) = (v_0, v_1) in A x A.
  std::vector<Element> images(v.size());
  for (Point x = 0; x < v.size(); ++x) {
    auto dg = v.digits(x);
    images[x] = t_table->mul(first[dg[0]], second[dg[1]]);
  }
  HomomorphismSpec w(v, *t_table, std::move(images), budget);

  FunctionSpace space(t_table, v.size());
  FunctionPoint beta = build_b_coordinate(space, v, w);

  std::vector<Permutation> v_elements, h_elements;
  for (Point x = 0; x < v.size(); ++x)
    v_elements.push_back(v.right_translation(x));
  for (auto const &pi : h.elements(budget))
    h_elements.push_back(v.coordinate_permutation(pi));
  std::sort(h_elements.begin(), h_elements.end());

  std::vector<Permutation> l_gens;
  for (Point g : v.generators())
    l_gens.push_back(v.right_translation(g));
  for (auto const &pi : h.generators())
    l_gens.push_back(v.coordinate_permutation(pi));
  PermGroup l(v.size(), l_gens);
  auto gens = stabilizer_generators(*t_table, l_gens, v.size());

  return {std::move(a_table), std::move(t_table), std::move(v), h, std::move(space),
          std::move(w), std::move(beta), std::move(v_elements), std::move(h_elements),
          std::move(l), std::move(gens)};
}

VerificationReport check_coordinate_miniature(std::string const &a_name, PermGroup const &a,
                                              std::size_t m, std::string const &h_name,
                                              PermGroup const &h, std::string const &t_name,
                                              PermGroup const &t, RunOptions const &options,
                                              Budget &budget)
{
  detail::Stopwatch clock;
  auto s = make_coordinate_setup(a, m, h, t, budget);
  auto const &table = *s.t;

  if (!centralizer(a, a, budget).group.is_trivial())
    throw PreconditionError("miniature: Z(A) is not trivial");
  std::vector<Permutation> q_gens;
  for (Element x : s.w.image_set())
    q_gens.push_back(table.element(x));
  if (!centralizer(t, PermGroup(t.degree(), q_gens), budget).group.is_trivial())
    throw PreconditionError("miniature: C_T(A x A) is not trivial");
  if (!h.setwise_pair_stabilizer(0, 1).is_trivial())
    throw PreconditionError("miniature: the setwise stabilizer of {0,1} in H is not trivial");

  VerificationReport report;
  report.check = "cf-mini";
  report.param("A", a_name);
  report.param("m", std::to_string(m));
  report.param("H", h_name);
  report.param("T", t_name);
  report.param("mode", mode_name(options.mode));

  std::uint64_t v_order = s.v_elements.size();
  std::uint64_t g_alpha = table.size() * s.l.order();

  report.add("translations by V fixing beta", v_order, count_fixing(s.space, s.beta, s.v_elements),
             Provenance::paper);

  CandidateFamily complement_family{all_elements(table), s.h_elements};
  auto complement = two_point_stabilizer_scan(s.space, s.beta, complement_family, budget,
                                              options.threads);
  report.add("|G_ab meet T x H|", 1, complement.order(), Provenance::paper);

  auto two_point = product_with(complement.elements, s.v_elements);
  report.add("|G_ab| = |V|", v_order, two_point.size(), Provenance::paper);
  report.add_true("G_ab != 1", two_point.size() > 1, Provenance::paper);

  if (options.mode == ScanMode::oracle) {
    CandidateFamily full{all_elements(table), s.l.elements(budget)};
    auto scan = two_point_stabilizer_scan(s.space, s.beta, full, budget, options.threads);
    report.add_true("full scan over T x (V:H) agrees", scan.elements == two_point,
                    Provenance::derived);
  }

  auto kernel = plus_kernel_scan(s.space, s.beta, s.g_alpha_generators, two_point, budget);
  report.add_true("G_ab = G_a^{+[1]}", kernel.elements == two_point, Provenance::paper);
  report.add_true("G_a^{+[1]} = V", is_translation_set(kernel.elements, s.v_elements),
                  Provenance::paper);

  // Normality, tested directly: conjugates by every generator of G_a stay put.
  bool normal = true;
  for (auto const &g : s.g_alpha_generators) {
    Permutation gi = g.sigma.inverse();
    Element ti = table.inv(g.t);
    for (auto const &x : two_point) {
      StabilizerElement c{table.mul(ti, table.mul(x.t, g.t)), gi * x.sigma * g.sigma};
      if (!std::binary_search(two_point.begin(), two_point.end(), c)) {
        normal = false;
        break;
      }
    }
  }
  report.add_true("G_ab normal in G_a", normal, Provenance::paper);
  report.add("local action regular: |beta^(G_a)| = |G_a| / |V|", g_alpha / v_order,
             kernel.orbit_length, Provenance::paper);
  top_kernel_claims(report, s.space, s.beta, kernel);

  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

} // namespace twopoint
