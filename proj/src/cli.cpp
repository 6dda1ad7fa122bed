#include "semabs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "semabs/absolute.hpp"
#include "semabs/descriptor_json.hpp"
#include "semabs/harness.hpp"

namespace semabs {

namespace {

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_presentation(text.str());
}

DistributionPoint parse_measure(const std::string& text, std::size_t expected) {
  RatVec weights;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) weights.push_back(parse_rational(item));
  if (weights.size() != expected)
    throw PreconditionError("expected " + std::to_string(expected) +
                            " comma-separated weights, got " + std::to_string(weights.size()));
  return make_exact_distribution(std::move(weights));
}

std::string support_names(const Stratum& st, const GeneratorSet& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < st.support.size(); ++i) {
    if (i) out += ",";
    out += gens.symbols[st.support[i]];
  }
  return out + "}";
}

int cmd_describe(const std::string& path, const std::string& json_path, int depth) {
  Presentation p = load_presentation(path);
  DescribeOptions opts;
  opts.fallback_depth = depth;
  AbsoluteDescriptor d = describe_absolute(p, opts);

  const GeneratorSet& gens = d.presentation.generators;
  std::cout << "name: " << (d.presentation.name.empty() ? "(unnamed)" : d.presentation.name)
            << "\n";
  std::cout << "generators:";
  for (const std::string& s : gens.symbols) std::cout << " " << s;
  std::cout << "\nclass: " << to_string(d.presentation.declared_class) << "\n";
  std::cout << "absolute dimension: " << d.dimension << "\n";
  std::cout << "topology: " << to_string(d.topology) << "\n";
  std::cout << "exact: " << (d.exact ? "true" : "false") << "\n";
  std::cout << "relation lattice rank: " << d.relation_lattice.rank() << "\n";
  std::cout << "central lattice rank: " << d.central_lattice.rank() << "\n";
  std::cout << "equations (" << d.equations.size() << "):\n";
  for (const CentralityEquation& eq : d.equations)
    std::cout << "  " << render_equation(gens, eq) << "\n";
  std::cout << "polytope: " << d.polytope.hull_vertices.size() << " hull vertices, "
            << d.polytope.facets.size() << " facets\n";
  std::cout << "strata (" << d.strata.size() << "):\n";
  for (const Stratum& st : d.strata) {
    std::cout << "  " << support_names(st, gens) << " dim " << st.dimension;
    if (st.is_main) std::cout << " (main)";
    std::cout << "\n";
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write '" + json_path + "'");
    out << write_descriptor(d);
  }
  return 0;
}

int cmd_equations(const std::string& path) {
  Presentation p = load_presentation(path);
  AbsoluteDescriptor d = describe_absolute(p);
  for (const CentralityEquation& eq : d.equations)
    std::cout << render_equation(d.presentation.generators, eq) << "\n";
  if (d.equations.empty()) std::cout << "(no equations)\n";
  return 0;
}

int cmd_check_measure(const std::string& path, const std::string& mu_text) {
  Presentation p = normalize(load_presentation(path));
  DistributionPoint mu = parse_measure(mu_text, p.generators.size());
  auto eqs = centrality_equations(central_pairs_exact(p));
  for (const CentralityEquation& eq : eqs) {
    if (!is_precentral({eq}, mu)) {
      std::cout << "violated: " << render_equation(p.generators, eq) << "\n";
      return 1;
    }
  }
  std::cout << "precentral\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mu_text, int depth) {
  Presentation p = normalize(load_presentation(path));
  DistributionPoint mu = parse_measure(mu_text, p.generators.size());
  RewriteSystem rs = complete(p);
  VerificationReport report = verify_central(rs, mu, depth);
  if (report.passed) {
    std::cout << "pass (depth " << report.depth << ", "
              << (report.exact_arithmetic ? "exact" : "float") << ")\n";
    return 0;
  }
  std::cout << "fail (depth " << report.depth << ")\n";
  for (const PathWitness& w : report.witnesses)
    std::cout << "  vertex " << render_side(w.vertex, p.generators) << " level " << w.level
              << ": " << w.path_a << " (" << w.prob_a << ") vs " << w.path_b << " ("
              << w.prob_b << ")\n";
  return 1;
}

int cmd_simulate(const std::string& path, const std::string& mu_text, int steps,
                 long long trials, std::uint64_t seed) {
  Presentation p = normalize(load_presentation(path));
  DistributionPoint mu = parse_measure(mu_text, p.generators.size());
  RewriteSystem rs = complete(p);
  SimulationStats stats = simulate(rs, mu, steps, trials, seed);

  nlohmann::ordered_json j;
  j["trials"] = stats.trials;
  j["steps"] = stats.steps;
  j["freq"] = nlohmann::ordered_json::object();
  for (const auto& [endpoint, f] : stats.frequencies)
    j["freq"][render_side(endpoint, p.generators)] = f;
  j["exact"] = nlohmann::ordered_json::object();
  for (const auto& [endpoint, prob] : stats.exact_probabilities)
    j["exact"][render_side(endpoint, p.generators)] = format_rational(prob);
  j["max_sigma"] = stats.max_sigma;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
  Presentation a = load_presentation(path_a);
  Presentation b = load_presentation(path_b);
  if (compare_quotient(a, b)) {
    std::cout << "equal\n";
    return 0;
  }
  std::cout << "different\n";
  return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finitely presented commutative semigroups: central measures, "
               "charts, strata, and walk verification"};
  app.require_subcommand(1);
  int result = 0;

  std::string file, file_b, json_path, mu_text;
  int depth = 6;
  int steps = 10;
  long long trials = 10000;
  std::uint64_t seed = 0;

  CLI::App* describe = app.add_subcommand("describe", "full description of one instance");
  describe->add_option("file", file, "presentation file (.sgp)")->required();
  describe->add_option("--json", json_path, "write the JSON descriptor to this file");
  describe->add_option("--depth", depth, "enumeration depth if completion is capped");
  describe->callback([&] { result = cmd_describe(file, json_path, depth); });

  CLI::App* equations = app.add_subcommand("equations", "print the centrality equations");
  equations->add_option("file", file, "presentation file (.sgp)")->required();
  equations->callback([&] { result = cmd_equations(file); });

  CLI::App* check = app.add_subcommand("check-measure", "exact precentrality test");
  check->add_option("file", file, "presentation file (.sgp)")->required();
  check->add_option("--mu", mu_text, "comma-separated rational weights")->required();
  check->callback([&] { result = cmd_check_measure(file, mu_text); });

  CLI::App* verify = app.add_subcommand("verify", "path-space centrality verification");
  verify->add_option("file", file, "presentation file (.sgp)")->required();
  verify->add_option("--mu", mu_text, "comma-separated rational weights")->required();
  verify->add_option("--depth", depth, "maximum path length");
  verify->callback([&] { result = cmd_verify(file, mu_text, depth); });

  CLI::App* simulate = app.add_subcommand("simulate", "seeded random-walk statistics");
  simulate->add_option("file", file, "presentation file (.sgp)")->required();
  simulate->add_option("--mu", mu_text, "comma-separated rational weights")->required();
  simulate->add_option("--steps", steps, "walk length");
  simulate->add_option("--trials", trials, "number of walks");
  simulate->add_option("--seed", seed, "random seed");
  simulate->callback([&] { result = cmd_simulate(file, mu_text, steps, trials, seed); });

  CLI::App* compare = app.add_subcommand("compare", "same absolute over the same generators?");
  compare->add_option("file_a", file, "first presentation file")->required();
  compare->add_option("file_b", file_b, "second presentation file")->required();
  compare->callback([&] { result = cmd_compare(file, file_b); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}

}  // namespace semabs
