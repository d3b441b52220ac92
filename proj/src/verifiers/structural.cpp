#include <algorithm>

#include "common.hpp"
#include "twopoint/catalog.hpp"
#include "twopoint/diagonal.hpp"
#include "twopoint/orbital.hpp"
#include "twopoint/subgroups.hpp"
#include "twopoint/verifiers.hpp"

namespace twopoint
{

VerificationReport check_regular_normal(std::string const &name, PermGroup const &g,
                                        PermGroup const &n, Point alpha, Budget &budget)
{
  detail::Stopwatch clock;
  if (n.degree() != g.degree())
    throw PreconditionError("prop31: N acts on a different set");
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw PreconditionError("prop31: N is not a normal subgroup of G");
  if (!n.is_transitive() || n.order() != n.degree())
    throw PreconditionError("prop31: N is not regular");
  if (alpha >= g.degree())
    throw PreconditionError("prop31: alpha out of range");

  VerificationReport report;
  report.check = "prop31";
  report.param("group", name);
  report.param("degree", std::to_string(g.degree()));
  report.param("alpha", std::to_string(alpha));

  bool primitive = g.is_primitive();
  std::size_t skipped = 0;
  for (auto const &s : suborbits(g, alpha)) {
    if (s.trivial)
      continue;
    OrbitalGraph gamma(g, alpha, s.representative, &budget);
    std::string tag = "beta=" + std::to_string(s.representative) + ": ";
    bool connected = is_connected(gamma);
    if (primitive)
      report.add_true(tag + "orbital graph connected", connected, Provenance::trivial);
    if (!connected) {
      ++skipped;
      continue;
    }
    report.add(tag + "|G_a^{+[1]}|", 1, plus_kernel(gamma).order(), Provenance::paper);

    std::vector<Permutation> carriers;
    for (Point delta : gamma.out(alpha))
      carriers.push_back(*n.transporter(alpha, delta));
    PermGroup generated(g.degree(), std::move(carriers));
    report.add(tag + "|<n_b : b in out(a)>| = |N|", n.order(), generated.order(),
               Provenance::paper);
  }
  report.param("primitive", primitive ? "true" : "false");
  report.param("disconnected_skipped", std::to_string(skipped));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_sd_dichotomy(std::string const &t_name, PermGroup const &t,
                                      std::size_t factors, bool all_suborbits, Budget &budget)
{
  detail::Stopwatch clock;
  if (factors < 2)
    throw PreconditionError("sd: at least two factors required");
  if (!is_perfect(t) || t.is_trivial())
    throw PreconditionError("sd: T must be a nonabelian simple group");

  DiagonalSpace space(t, factors - 1);
  std::vector<ElementMap> outer;
  if (auto tau = outer_transposition(t))
    outer.push_back(space.table().conjugation_by(*tau));
  PermGroup g = build_W(space, outer);

  // Socle <= G <= W.
  ComponentAction components(space);
  PermGroup socle = build_socle(space);
  for (auto const &x : socle.generators()) {
    if (!g.contains(x))
      throw PreconditionError("sd: G does not contain the socle");
  }
  for (auto const &x : g.generators()) {
    try {
      components.factor(x);
    } catch (std::invalid_argument const &) {
      throw PreconditionError("sd: G is not contained in W");
    }
  }
  if (!g.is_primitive())
    throw PreconditionError("sd: G is not primitive");

  VerificationReport report;
  report.check = "sd-dichotomy";
  report.param("T", t_name);
  report.param("factors", std::to_string(factors));
  report.param("degree", std::to_string(space.size()));
  report.param("order", std::to_string(g.order()));

  auto const &table = space.table();
  std::size_t ell1 = space.factors();
  std::size_t branch1 = 0, branch2 = 0;
  for (auto const &s : suborbits(g, DiagonalSpace::alpha())) {
    if (s.trivial)
      continue;
    OrbitalGraph gamma(g, DiagonalSpace::alpha(), s.representative, &budget);
    PermGroup k = plus_kernel(gamma);
    std::string tag = "beta=" + std::to_string(s.representative) + ": ";
    auto order = k.order();

    std::string branch = order == 1       ? "branch 1"
                         : order == ell1 ? "branch 2"
                                         : "neither (|K| = " + std::to_string(order) + ")";
    report.claims.push_back({tag + "dichotomy", "branch 1 (|K| = 1) or branch 2 (|K| = factors)",
                             branch, Provenance::paper, order == 1 || order == ell1});
    if (order == 1) {
      ++branch1;
    } else {
      ++branch2;
      std::vector<FactoredElement> parts;
      for (auto const &x : k.elements(budget))
        parts.push_back(components.factor(x));
      Tuple identity(ell1, ElementTable::identity());
      ElementMap id_map = table.identity_map();

      bool meets_aut_trivially = true, in_top = true;
      std::vector<Permutation> sigmas;
      std::vector<char> hit(ell1, 0);
      for (auto const &f : parts) {
        bool top = f.phi == id_map && f.m == identity;
        in_top = in_top && top;
        if (f.sigma.is_identity() && !top)
          meets_aut_trivially = false;
        sigmas.push_back(f.sigma);
        hit[f.sigma[0]] = 1;
      }
      std::sort(sigmas.begin(), sigmas.end());
      bool distinct = std::adjacent_find(sigmas.begin(), sigmas.end()) == sigmas.end();
      bool regular = distinct && sigmas.size() == ell1 &&
                     std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
      Tuple b = space.tuple(s.representative);

      report.add_true(tag + "K meets Aut(T) trivially", meets_aut_trivially, Provenance::paper);
      report.add_true(tag + "K lies in the coordinate permutations", in_top, Provenance::paper);
      report.add(tag + "|K| = factors", ell1, order, Provenance::paper);
      report.add_true(tag + "K regular on coordinates", regular, Provenance::paper);
      report.add_true(tag + "sigma -> t_{0^(sigma^-1)} is a homomorphism",
                      detail::top_homomorphism(table, b, sigmas), Provenance::paper);
    }
    if (!all_suborbits)
      break;
  }
  report.param("branch1", std::to_string(branch1));
  report.param("branch2", std::to_string(branch2));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

} // namespace twopoint
