#include "hall/oracle.hpp"

#include <random>
#include <set>

#include "subset_enum.hpp"

namespace hall::oracle {

namespace {

bool dfs_transversal(const IndexedFamily& family,
                     const std::vector<Token>& order, std::size_t at,
                     std::set<Token>& used, Transversal& partial) {
  if (at == order.size()) return true;
  const Token& i = order[at];
  for (const Token& e : family.set_of(i)) {
    if (used.contains(e)) continue;
    used.insert(e);
    partial.assignment[i] = e;
    if (dfs_transversal(family, order, at + 1, used, partial)) return true;
    partial.assignment.erase(i);
    used.erase(e);
  }
  return false;
}

// Uniform in [0,1), portable across platforms (no std distribution).
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::optional<Transversal> brute_force_transversal(
    const IndexedFamily& family) {
  if (family.size() > 8 || family.universe().card() > 8)
    throw CapExceeded("brute_force_transversal capped at 8 indices / 8 values");
  Transversal t;
  std::set<Token> used;
  if (dfs_transversal(family, family.indices().members(), 0, used, t))
    return t;
  return std::nullopt;
}

std::vector<FiniteSet> enumerate_subset_violations(
    const IndexedFamily& family) {
  if (family.size() > 20)
    throw CapExceeded("enumerate_subset_violations capped at 20 indices");
  auto bf = detail::BitFamily::of(family);
  std::vector<FiniteSet> out;
  detail::for_each_subset_by_size(
      bf.n, bf.n, [&](const std::vector<std::size_t>& positions) {
        if (positions.size() > bf.union_card(positions))
          out.push_back(detail::tokens_at(bf, positions));
        return false;
      });
  return out;
}

std::optional<Chain> brute_force_chain(const InverseSystem& sys) {
  std::size_t product = 1;
  for (const FiniteSet& level : sys.levels()) {
    product *= level.card();
    if (product > 100000)
      throw CapExceeded("brute_force_chain level product over 100000");
    if (product == 0) return std::nullopt;
  }

  // DFS in level order with the coherence filter; first hit is the
  // lex-least coherent chain.
  Chain chain;
  auto dfs = [&](auto&& self, std::size_t n) -> bool {
    if (n > sys.horizon()) return true;
    for (const Token& x : sys.level(n)) {
      if (n > 0 && sys.step(x) != chain.entries.back()) continue;
      chain.entries.push_back(x);
      if (self(self, n + 1)) return true;
      chain.entries.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0)) return chain;
  return std::nullopt;
}

std::optional<CarriedFunction> brute_force_carried(const SimpleGraph& g) {
  if (g.vertices().card() > 5)
    throw CapExceeded("brute_force_carried capped at 5 vertices");
  const auto& verts = g.vertices().members();
  CarriedFunction f;
  std::set<EdgePair> used;
  auto dfs = [&](auto&& self, std::size_t at) -> bool {
    if (at == verts.size()) return true;
    const Token& v = verts[at];
    for (const Token& w : neighbor_set(g, v)) {
      EdgePair e = EdgePair::of(v, w);
      if (used.contains(e)) continue;
      used.insert(e);
      f.next[v] = w;
      if (self(self, at + 1)) return true;
      f.next.erase(v);
      used.erase(e);
    }
    return false;
  };
  if (dfs(dfs, 0)) return f;
  return std::nullopt;
}

IndexedFamily random_family(std::uint64_t seed, std::size_t index_count,
                            std::size_t universe_size, double density) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  entries.reserve(index_count);
  for (std::size_t i = 0; i < index_count; ++i) {
    std::vector<Token> elements;
    for (std::size_t e = 0; e < universe_size; ++e)
      if (unit_draw(rng) < density) elements.push_back("x" + std::to_string(e));
    entries.emplace_back("i" + std::to_string(i), std::move(elements));
  }
  return IndexedFamily::of(entries);
}

std::pair<SimpleGraph, Coloring> random_bipartite(std::uint64_t seed,
                                                  std::size_t left_count,
                                                  std::size_t right_count,
                                                  double density) {
  std::mt19937_64 rng(seed);
  std::vector<Token> vertices;
  Coloring coloring;
  for (std::size_t i = 0; i < left_count; ++i) {
    vertices.push_back("l" + std::to_string(i));
    coloring.color[vertices.back()] = 0;
  }
  for (std::size_t j = 0; j < right_count; ++j) {
    vertices.push_back("r" + std::to_string(j));
    coloring.color[vertices.back()] = 1;
  }
  std::vector<std::pair<Token, Token>> edges;
  for (std::size_t i = 0; i < left_count; ++i)
    for (std::size_t j = 0; j < right_count; ++j)
      if (unit_draw(rng) < density)
        edges.emplace_back("l" + std::to_string(i), "r" + std::to_string(j));
  return {SimpleGraph::of(std::move(vertices), edges), std::move(coloring)};
}

}  // namespace hall::oracle
