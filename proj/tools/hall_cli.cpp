// Command-line front door: JSON in, machine-readable verdicts and
// certificates out (stdout), diagnostics on stderr.
//
// Exit codes: 0 positive verdict, 1 negative verdict with witness,
// 2 usage / input / cap error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "hall/json_io.hpp"
#include "hall/oracle.hpp"

namespace {

using hall::io::json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hall::Error("cannot open file: " + path);
  return json::parse(in);
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

[[noreturn]] void internal_error(const std::string& what) {
  // A certificate must re-verify before it is printed.
  std::cerr << "internal error: " << what << "\n";
  std::exit(kError);
}

hall::IndexedFamily family_from_file(const std::string& path) {
  json j = parse_file(path);
  if (hall::io::looks_like_relation(j))
    return hall::family_of_relation(hall::io::load_relation(j));
  return hall::io::load_family(j);
}

void check_witness(const hall::IndexedFamily& family,
                   const hall::FiniteSet& subset) {
  if (subset.card() <= hall::bind_union(family, subset).card())
    internal_error("witness failed re-verification");
}

int cmd_check(const std::string& path) {
  hall::IndexedFamily family = family_from_file(path);
  hall::HallReport report = hall::check_hall_condition(family);
  if (report.satisfied()) {
    emit({{"status", "satisfied"}});
    return kPositive;
  }
  check_witness(family, report.witness->subset);
  emit({{"status", "violated"},
        {"witness", hall::io::subset_json(report.witness->subset)},
        {"subset_card", report.witness->subset_card},
        {"union_card", report.witness->union_card}});
  return kNegative;
}

int cmd_solve(const std::string& path, const std::string& method,
              bool verify) {
  hall::IndexedFamily family = family_from_file(path);

  hall::SolveOutcome outcome;
  if (method == "inductive") {
    outcome = hall::solve_inductive(family);
  } else if (method == "augmenting") {
    auto t = hall::solve_augmenting(family);
    if (t) {
      outcome = {*t};
    } else {
      auto j = hall::deficiency_witness(family);
      hall::FiniteSet uni = hall::bind_union(family, *j);
      outcome = {hall::HallWitness{*j, j->card(), uni.card()}};
    }
  } else {
    throw hall::Error("unknown method: " + method +
                      " (expected inductive or augmenting)");
  }

  if (verify) {
    try {
      bool oracle_found =
          hall::oracle::brute_force_transversal(family).has_value();
      if (oracle_found != outcome.matched())
        internal_error("oracle disagrees on matching existence");
    } catch (const hall::CapExceeded&) {
      std::cerr << "note: instance above oracle caps, --verify limited to "
                   "certificate re-checks\n";
    }
  }

  if (outcome.matched()) {
    if (!hall::verify_transversal(family, outcome.matching().assignment).ok())
      internal_error("matching failed re-verification");
    emit({{"status", "matched"},
          {"matching", hall::io::matching_json(outcome.matching())}});
    return kPositive;
  }
  check_witness(family, outcome.violation().subset);
  emit({{"status", "violated"},
        {"witness", hall::io::subset_json(outcome.violation().subset)}});
  return kNegative;
}

int cmd_graph_match(const std::string& path) {
  auto [graph, coloring] = hall::io::load_graph(parse_file(path));
  if (!coloring) throw hall::Error("graph file needs a colors object");
  auto check = hall::validate_coloring(graph, *coloring);
  if (check.kind == hall::ColoringCheck::Kind::Uncolored)
    throw hall::Error("vertex without a color: " + check.vertex);
  if (check.kind == hall::ColoringCheck::Kind::Monochrome)
    throw hall::Error("monochromatic edge: [" + check.edge->lo + ", " +
                      check.edge->hi + "]");

  auto outcome = hall::hall_bipartite(graph, *coloring);
  hall::FiniteSet class0 = hall::color_class(graph, *coloring, 0);
  if (auto* m = std::get_if<hall::GraphMatching>(&outcome)) {
    if (!hall::validate_matching(graph, m->edges).ok() ||
        !hall::saturates(*m, class0).ok)
      internal_error("graph matching failed re-verification");
    emit({{"status", "matched"}, {"matching", hall::io::edges_json(m->edges)}});
    return kPositive;
  }
  const auto& witness = std::get<hall::FiniteSet>(outcome);
  if (witness.card() <= hall::neighbor_set_image(graph, witness).card())
    internal_error("neighborhood witness failed re-verification");
  emit({{"status", "violated"},
        {"witness", hall::io::subset_json(witness)}});
  return kNegative;
}

int cmd_carried(const std::string& path) {
  auto [graph, coloring] = hall::io::load_graph(parse_file(path));
  auto outcome = hall::find_carried_function(graph);
  if (auto* f = std::get_if<hall::CarriedFunction>(&outcome)) {
    std::set<hall::Token> edge_keys;
    for (const auto& [v, w] : f->next) {
      if (!graph.adjacent(v, w))
        internal_error("carried function leaves adjacency");
      if (!edge_keys.insert(hall::edge_token(hall::EdgePair::of(v, w))).second)
        internal_error("carried function reuses an edge");
    }
    if (f->next.size() != graph.vertices().card())
      internal_error("carried function is not total");
    emit({{"status", "matched"},
          {"function", hall::io::function_json(*f)}});
    return kPositive;
  }
  const auto& witness = std::get<hall::FiniteSet>(outcome);
  std::vector<hall::Token> incident;
  for (const hall::Token& u : witness)
    for (const hall::EdgePair& e : hall::incidence_set(graph, u))
      incident.push_back(hall::edge_token(e));
  if (witness.card() <= hall::FiniteSet::of(incident).card())
    internal_error("incidence witness failed re-verification");
  emit({{"status", "violated"},
        {"witness", hall::io::subset_json(witness)}});
  return kNegative;
}

void check_chain(const hall::InverseSystem& sys, const hall::Chain& chain) {
  if (chain.entries.size() != sys.horizon() + 1)
    internal_error("chain has wrong length");
  for (std::size_t n = 0; n <= sys.horizon(); ++n)
    if (!sys.level(n).contains(chain.entries[n]))
      internal_error("chain entry outside its level");
  for (std::size_t n = 0; n < sys.horizon(); ++n)
    if (sys.step(chain.entries[n + 1]) != chain.entries[n])
      internal_error("chain is not coherent");
}

hall::LazyFamily lazy_catalog(const std::string& name) {
  if (name == "interval" || name == "interval:i,i+1")
    return hall::LazyFamily([](std::size_t i) {
      return hall::FiniteSet::of(
          {hall::nat_token(i), hall::nat_token(i + 1)});
    });
  if (name.rfind("constant:", 0) == 0) {
    hall::Token value = name.substr(9);
    return hall::LazyFamily(
        [value](std::size_t) { return hall::FiniteSet::single(value); });
  }
  throw hall::Error("unknown lazy family: " + name +
                    " (catalog: interval, constant:<token>)");
}

int cmd_koenig_file(const std::string& path) {
  hall::InverseSystem sys = hall::io::load_system(parse_file(path));
  auto chain = hall::find_chain(sys);
  if (!chain) {
    for (std::size_t n = 0; n <= sys.horizon(); ++n) {
      if (sys.level(n).empty()) {
        emit({{"status", "violated"}, {"empty_level", n}});
        return kNegative;
      }
    }
    internal_error("chain absent without an empty level");
  }
  check_chain(sys, *chain);
  emit({{"status", "matched"}, {"chain", hall::io::chain_json(*chain)}});
  return kPositive;
}

int cmd_koenig_lazy(const std::string& name, std::size_t prefix,
                    std::size_t horizon) {
  hall::LazyFamily family = lazy_catalog(name);
  hall::SolveOutcome outcome =
      hall::infinite_hall_prefix(family, prefix, horizon);
  if (outcome.matched()) {
    std::vector<std::pair<hall::Token, std::vector<hall::Token>>> entries;
    for (std::size_t i = 0; i < prefix; ++i)
      entries.emplace_back(hall::nat_token(i), family.at(i).members());
    hall::IndexedFamily prefix_family = hall::IndexedFamily::of(entries);
    if (!hall::verify_transversal(prefix_family,
                                  outcome.matching().assignment)
             .ok())
      internal_error("prefix matching failed re-verification");
    emit({{"status", "matched"},
          {"matching", hall::io::matching_json(outcome.matching())}});
    return kPositive;
  }
  emit({{"status", "violated"},
        {"witness", hall::io::subset_json(outcome.violation().subset)}});
  return kNegative;
}

int cmd_gen(std::uint64_t seed, std::size_t indices, std::size_t universe,
            double density) {
  emit(hall::io::family_json(
      hall::oracle::random_family(seed, indices, universe, density)));
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall marriage condition: checking, transversals, bipartite "
               "matchings, carried functions, and Koenig chains"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "inductive";
  bool verify = false;
  std::string lazy_name;
  std::size_t prefix = 0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  std::size_t gen_indices = 4;
  std::size_t gen_universe = 4;
  double gen_density = 0.5;

  auto* check = app.add_subcommand("check", "Check the Hall condition");
  check->add_option("file", file, "family or relation JSON")->required();

  auto* solve = app.add_subcommand("solve", "Find a transversal or witness");
  solve->add_option("file", file, "family or relation JSON")->required();
  solve->add_option("--method", method, "inductive|augmenting");
  solve->add_flag("--verify", verify, "cross-check against the brute-force oracle");

  auto* graph_match = app.add_subcommand(
      "graph-match", "Matching saturating color class 0 of a bipartition");
  graph_match->add_option("file", file, "graph JSON with colors")->required();

  auto* carried =
      app.add_subcommand("carried", "Find a function carried by a graph");
  carried->add_option("file", file, "graph JSON")->required();

  auto* koenig = app.add_subcommand(
      "koenig", "Inverse-system chain, or countable Hall prefix (--lazy)");
  koenig->add_option("file", file, "inverse-system JSON");
  koenig->add_option("--lazy", lazy_name, "named generator (interval, constant:<t>)");
  koenig->add_option("--prefix", prefix, "prefix length n");
  koenig->add_option("--horizon", horizon, "horizon H >= n");

  auto* gen = app.add_subcommand("gen", "Emit a seeded random family");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--indices", gen_indices, "index count");
  gen->add_option("--universe", gen_universe, "universe size");
  gen->add_option("--density", gen_density, "inclusion probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (solve->parsed()) return cmd_solve(file, method, verify);
    if (graph_match->parsed()) return cmd_graph_match(file);
    if (carried->parsed()) return cmd_carried(file);
    if (koenig->parsed()) {
      if (!lazy_name.empty()) return cmd_koenig_lazy(lazy_name, prefix, horizon);
      if (file.empty())
        throw hall::Error("koenig needs a system file or --lazy");
      return cmd_koenig_file(file);
    }
    if (gen->parsed()) return cmd_gen(seed, gen_indices, gen_universe, gen_density);
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kError;
  } catch (const hall::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
