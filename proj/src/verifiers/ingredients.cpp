#include "common.hpp"
#include "twopoint/catalog.hpp"
#include "twopoint/orbital.hpp"
#include "twopoint/subgroups.hpp"
#include "twopoint/verifiers.hpp"

namespace twopoint
{

VerificationReport check_ingredients(std::uint64_t p, RunOptions const &options, Budget &budget)
{
  detail::Stopwatch clock;
  if (!is_prime(p) || p < 5)
    throw PreconditionError("ingredients: p must be a prime at least 5");
  bool in_range = (p % 10 == 1 || p % 10 == 9) && p >= 61;
  if (!in_range && !options.force)
    throw PreconditionError("ingredients: p must be 1 or 9 mod 10 and at least 61 (use --force)");

  VerificationReport report;
  report.check = "cf-ingredients";
  report.param("p", std::to_string(p));
  report.param("seed", std::to_string(options.seed));

  PermGroup h = projective_special_linear(p);
  std::uint64_t h_order = h.order();
  report.add("|PSL2(p)| = p(p^2-1)/2", p * (p * p - 1) / 2, h_order, Provenance::derived);

  // Lagrange rules Alt(5) out outright; otherwise a miss is only a miss.
  std::optional<Alt5Search> search;
  if (h_order % 60 == 0) {
    search = find_alt5_subgroup(h, options.seed);
    if (!search->group)
      throw Infeasible("ingredients: no Alt(5) found after " +
                       std::to_string(search->attempts) + " attempts");
  }
  if (!search) {
    std::string none = "none (60 does not divide |PSL2(p)|)";
    report.add("Alt(5) subgroup: order, perfect", "60, perfect", none, Provenance::paper);
    report.add("coset action: degree, transitive, primitive, faithful",
               "degree |PSL2(p)|/60, transitive, primitive, faithful", "not computed",
               Provenance::paper);
    report.add_true("pair with trivial setwise stabilizer", false, Provenance::paper);
  } else {
    PermGroup const &a = *search->group;
    report.param("alt5_a", search->a.to_string());
    report.param("alt5_b", search->b.to_string());
    report.add("Alt(5) subgroup: order, perfect", "60, perfect",
               std::to_string(a.order()) + (is_perfect(a) ? ", perfect" : ", not perfect"),
               Provenance::paper);

    auto action = coset_action(h, a, budget);
    PermGroup const &image = action.image;
    std::string actual = "degree " + std::to_string(image.degree());
    actual += image.is_transitive() ? ", transitive" : ", intransitive";
    actual += image.is_primitive() ? ", primitive" : ", imprimitive";
    actual += image.order() == h_order ? ", faithful" : ", not faithful";
    report.add("coset action: degree, transitive, primitive, faithful",
               "degree " + std::to_string(h_order / 60) + ", transitive, primitive, faithful",
               actual, Provenance::paper);

    std::optional<Point> witness;
    std::size_t scanned = 0;
    for (auto const &s : suborbits(image, 0)) {
      if (s.trivial)
        continue;
      ++scanned;
      if (image.setwise_pair_stabilizer(0, s.representative).is_trivial()) {
        witness = s.representative;
        break;
      }
    }
    report.param("pair_scanned", std::to_string(scanned));
    report.param("pair", witness ? "{0," + std::to_string(*witness) + "}" : "none");
    report.add_true("pair with trivial setwise stabilizer", witness.has_value(),
                    Provenance::paper);
  }

  PermGroup alt10 = alternating_group(10);
  auto a5 = alternating_group(5);
  std::vector<Permutation> gens;
  for (auto const &x : a5.generators()) {
    gens.push_back(x.extended(10));
    std::vector<Point> shifted(10);
    for (Point i = 0; i < 10; ++i)
      shifted[i] = i < 5 ? i : static_cast<Point>(x[i - 5] + 5);
    gens.push_back(Permutation(std::move(shifted)));
  }
  auto c = centralizer(alt10, PermGroup(10, std::move(gens)), budget);
  report.add("|C_Alt(10)(Alt(5) x Alt(5))|", 1, c.group.order(), Provenance::paper);

  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

} // namespace twopoint
