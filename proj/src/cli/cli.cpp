#include "twopoint/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twopoint/catalog.hpp"
#include "twopoint/constructions.hpp"
#include "twopoint/orbital.hpp"

namespace twopoint
{

using Json = nlohmann::ordered_json;

std::vector<VerificationReport> verify_all(RunOptions const &options, std::uint64_t budget_limit)
{
  std::vector<VerificationReport> reports;
  auto fresh = [&] { return Budget(budget_limit); };

  for (char const *spec : {"AGL1(5)", "AGL1(7)", "AGL1(11)", "HS(Alt(5))"}) {
    Budget budget = fresh();
    auto built = build_group(spec, budget, options.seed);
    reports.push_back(check_regular_normal(spec, built.group, *built.regular_normal, 0, budget));
  }
  {
    Budget budget = fresh();
    reports.push_back(check_sd_dichotomy("Alt(5)", alternating_group(5), 3, true, budget));
  }
  auto sym3 = symmetric_group(3);
  auto transposition = Permutation::from_cycles(3, {{0, 1}});
  {
    // Smallest parameters run both scan routes.
    RunOptions both = options;
    both.mode = ScanMode::oracle;
    Budget budget = fresh();
    reports.push_back(check_affine(2, 2, 3, "Sym(3)", sym3, transposition, both, budget));
  }
  {
    Budget budget = fresh();
    reports.push_back(check_affine(2, 3, 7, "Sym(3)", sym3, transposition, options, budget));
  }
  {
    Budget budget = fresh();
    reports.push_back(check_coordinate_miniature("Sym(3)", sym3, 3, "Cyc(3)", cyclic_group(3),
                                                 "Sym(6)", symmetric_group(6), options, budget));
  }
  {
    Budget budget = fresh();
    reports.push_back(check_ingredients(61, options, budget));
  }
  return reports;
}

namespace
{

struct Output
{
  std::ostream &out;
  bool json;

  int reports(std::vector<VerificationReport> const &rs) const
  {
    if (json) {
      out << (rs.size() == 1 ? report_to_json(rs.front()) : reports_to_json(rs)) << "\n";
    } else {
      for (auto const &r : rs)
        out << report_to_text(r);
    }
    bool pass = std::all_of(rs.begin(), rs.end(), [](auto const &r) { return r.pass(); });
    return pass ? exit_pass : exit_claim_failed;
  }

  int fields(Json const &j) const
  {
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      for (auto const &[k, v] : j.items())
        out << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return exit_pass;
  }
};

Point checked_point(PermGroup const &g, std::uint64_t x, char const *what)
{
  if (x >= g.degree())
    throw PreconditionError(std::string(what) + " is not a point of the group's domain");
  return static_cast<Point>(x);
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Permutation group engine and two-point stabilizer checks", "twopoint"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t budget_limit = Budget::from_environment().limit();
  unsigned threads = 1;
  app.add_flag("--json", json, "JSON output");
  app.add_option("--seed", seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--budget", budget_limit, "Operation budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", threads, "Threads for scans")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::string spec;
  std::uint64_t alpha = 0, beta = 1;

  auto *info = app.add_subcommand("info", "Degree, order, transitivity, primitivity");
  info->add_option("spec", spec, "Group descriptor")->required();

  auto *subdeg = app.add_subcommand("subdegrees", "Suborbits of the point stabilizer");
  subdeg->add_option("spec", spec, "Group descriptor")->required();
  subdeg->add_option("--alpha", alpha, "Base point")->capture_default_str();

  auto *orbital = app.add_subcommand("orbital", "Orbital graph of (alpha, beta)");
  orbital->add_option("spec", spec, "Group descriptor")->required();
  orbital->add_option("--alpha", alpha, "Tail of the arc")->required();
  orbital->add_option("--beta", beta, "Head of the arc")->required();

  auto *verify = app.add_subcommand("verify", "Run a check");
  verify->require_subcommand(1);

  auto *regular_cmd =
      verify->add_subcommand("prop31", "Trivial kernels with a regular normal subgroup");
  regular_cmd->add_option("spec", spec, "Group descriptor with a known regular normal subgroup")
      ->required();
  regular_cmd->add_option("--alpha", alpha, "Base point")->capture_default_str();

  std::string t_spec = "Alt(5)";
  std::size_t factors = 3;
  bool all_suborbits = false;
  auto *sd = verify->add_subcommand("sd", "Kernel dichotomy for the full diagonal group");
  sd->add_option("--T", t_spec, "Simple group")->capture_default_str();
  sd->add_option("--factors", factors, "Number of simple factors")->capture_default_str();
  sd->add_flag("--all-suborbits", all_suborbits, "Check every suborbit");

  std::uint32_t p = 2, r = 3;
  std::size_t k = 2;
  std::string ex_t = "Sym(3)", p_gen = "(0 1)";
  bool oracle = false;
  auto *affine_cmd = verify->add_subcommand("ex42", "Affine construction");
  affine_cmd->add_option("--p", p, "Prime")->capture_default_str();
  affine_cmd->add_option("--k", k, "Dimension")->capture_default_str();
  affine_cmd->add_option("--r", r, "Order of R")->capture_default_str();
  affine_cmd->add_option("--T", ex_t, "Group T")->capture_default_str();
  affine_cmd->add_option("--P", p_gen, "Generator of P in cycle notation")->capture_default_str();
  affine_cmd->add_flag("--oracle", oracle, "Also run the unfactorized scan");

  std::string a_spec = "Sym(3)", h_spec = "Cyc(3)", coordinate_t = "Sym(6)";
  std::size_t m = 3;
  auto *coordinate_cmd = verify->add_subcommand("cf-mini", "Coordinate construction miniature");
  coordinate_cmd->add_option("--A", a_spec, "Coordinate group")->capture_default_str();
  coordinate_cmd->add_option("--m", m, "Number of coordinates")->capture_default_str();
  coordinate_cmd->add_option("--H", h_spec, "Group permuting coordinates")->capture_default_str();
  coordinate_cmd->add_option("--T", coordinate_t, "Group containing A x A")->capture_default_str();
  coordinate_cmd->add_flag("--oracle", oracle, "Also run the unfactorized scan");

  std::uint64_t prime = 61;
  bool force = false;
  auto *ingredients_cmd =
      verify->add_subcommand("cf-ingredients", "Ingredients at true parameters");
  ingredients_cmd->add_option("--p", prime, "Prime")->capture_default_str();
  ingredients_cmd->add_flag("--force", force, "Run outside the guaranteed range");

  auto *all = verify->add_subcommand("all", "Full acceptance suite");

  for (auto *sub : {info, subdeg, orbital, verify, regular_cmd, sd, affine_cmd, coordinate_cmd,
                    ingredients_cmd, all})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    err << app.help();
    return exit_error;
  }

  Output output{out, json};
  RunOptions options;
  options.seed = seed;
  options.threads = threads;
  options.force = force;
  options.mode = oracle ? ScanMode::oracle : ScanMode::fast;
  Budget budget(budget_limit);

  try {
    if (info->parsed()) {
      auto built = build_group(spec, budget, seed);
      auto const &g = built.group;
      auto prim = g.primitivity();
      Json j;
      j["spec"] = built.description;
      j["degree"] = g.degree();
      j["order"] = g.order();
      j["generators"] = g.generators().size();
      j["transitive"] = prim.transitive;
      j["primitive"] = prim.primitive;
      if (built.regular_normal)
        j["regular_normal_order"] = built.regular_normal->order();
      return output.fields(j);
    }
    if (subdeg->parsed()) {
      auto g = build_group(spec, budget, seed).group;
      Point a = checked_point(g, alpha, "alpha");
      if (!g.is_transitive())
        throw PreconditionError("subdegrees: the group is intransitive");
      Json reps = Json::array(), lengths = Json::array();
      for (auto const &s : suborbits(g, a)) {
        reps.push_back(s.representative);
        lengths.push_back(s.length);
      }
      Json j;
      j["alpha"] = a;
      j["representatives"] = reps;
      j["subdegrees"] = lengths;
      return output.fields(j);
    }
    if (orbital->parsed()) {
      auto g = build_group(spec, budget, seed).group;
      Point a = checked_point(g, alpha, "alpha");
      Point b = checked_point(g, beta, "beta");
      if (a == b)
        throw PreconditionError("orbital: alpha and beta must differ");
      if (!g.is_transitive())
        throw PreconditionError("orbital: the group is intransitive");
      OrbitalGraph gamma(g, a, b, &budget);
      auto conn = connectivity(gamma);
      Point ab[] = {a, b};
      Json j;
      j["d"] = gamma.valency();
      j["self_paired"] = is_self_paired(gamma);
      j["connected"] = conn.weak;
      j["strongly_connected"] = conn.strong;
      j["two_point_stabilizer_order"] = g.pointwise_stabilizer(ab).order();
      j["plus_kernel_order"] = plus_kernel(gamma).order();
      j["local_group_order"] = local_group(gamma).group.order();
      return output.fields(j);
    }
    if (regular_cmd->parsed()) {
      auto built = build_group(spec, budget, seed);
      if (!built.regular_normal)
        throw PreconditionError("prop31: no regular normal subgroup known for " +
                                built.description);
      Point a = checked_point(built.group, alpha, "alpha");
      return output.reports(
          {check_regular_normal(built.description, built.group, *built.regular_normal, a, budget)});
    }
    if (sd->parsed()) {
      auto t = build_group(t_spec, budget, seed).group;
      return output.reports({check_sd_dichotomy(t_spec, t, factors, all_suborbits, budget)});
    }
    if (affine_cmd->parsed()) {
      auto t = build_group(ex_t, budget, seed).group;
      Permutation gen;
      try {
        gen = Permutation::parse(p_gen, t.degree());
      } catch (std::invalid_argument const &e) {
        throw PreconditionError(std::string("--P: ") + e.what());
      }
      return output.reports({check_affine(p, k, r, ex_t, t, gen, options, budget)});
    }
    if (coordinate_cmd->parsed()) {
      auto a = build_group(a_spec, budget, seed).group;
      auto h = build_group(h_spec, budget, seed).group;
      auto t = build_group(coordinate_t, budget, seed).group;
      return output.reports(
          {check_coordinate_miniature(a_spec, a, m, h_spec, h, coordinate_t, t, options, budget)});
    }
    if (ingredients_cmd->parsed())
      return output.reports({check_ingredients(prime, options, budget)});
    if (all->parsed())
      return output.reports(verify_all(options, budget_limit));
  } catch (PreconditionError const &e) {
    err << "precondition failed: " << e.what() << "\n";
    return exit_error;
  } catch (Infeasible const &e) {
    err << "infeasible: " << e.what() << "\n";
    return exit_error;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  } catch (std::overflow_error const &e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  err << app.help();
  return exit_error;
}

} // namespace twopoint
