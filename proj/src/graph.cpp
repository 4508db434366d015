#include "hall/graph.hpp"

#include <algorithm>

#include "hall/relation.hpp"

namespace hall {

EdgePair EdgePair::of(Token v, Token w) {
  if (v == w) throw SelfLoop(v);
  if (w < v) std::swap(v, w);
  return {std::move(v), std::move(w)};
}

Token edge_token(const EdgePair& e) { return e.lo + "|" + e.hi; }

SimpleGraph SimpleGraph::of(std::vector<Token> vertices,
                            const std::vector<std::pair<Token, Token>>& edges) {
  SimpleGraph g;
  g.vertices_ = FiniteSet::of(std::move(vertices));
  g.edges_.reserve(edges.size());
  for (const auto& [v, w] : edges) {
    if (!g.vertices_.contains(v)) throw UnknownVertex(v);
    if (!g.vertices_.contains(w)) throw UnknownVertex(w);
    g.edges_.push_back(EdgePair::of(v, w));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());
  return g;
}

bool SimpleGraph::adjacent(const Token& v, const Token& w) const {
  if (v == w) return false;
  return std::binary_search(edges_.begin(), edges_.end(), EdgePair::of(v, w));
}

FiniteSet neighbor_set(const SimpleGraph& g, const Token& v) {
  if (!g.vertices().contains(v)) throw UnknownVertex(v);
  std::vector<Token> out;
  for (const EdgePair& e : g.edges())
    if (e.incident(v)) out.push_back(e.other(v));
  return FiniteSet::of(std::move(out));
}

FiniteSet neighbor_set_image(const SimpleGraph& g, const FiniteSet& subset) {
  FiniteSet out;
  for (const Token& v : subset) out = out.unite(neighbor_set(g, v));
  return out;
}

std::size_t degree(const SimpleGraph& g, const Token& v) {
  return neighbor_set(g, v).card();
}

std::vector<EdgePair> incidence_set(const SimpleGraph& g, const Token& v) {
  if (!g.vertices().contains(v)) throw UnknownVertex(v);
  std::vector<EdgePair> out;
  for (const EdgePair& e : g.edges())
    if (e.incident(v)) out.push_back(e);
  return out;
}

ColoringCheck validate_coloring(const SimpleGraph& g, const Coloring& c) {
  for (const Token& v : g.vertices())
    if (!c.color.contains(v)) return {ColoringCheck::Kind::Uncolored, v, {}};
  for (const EdgePair& e : g.edges())
    if (c.color.at(e.lo) == c.color.at(e.hi))
      return {ColoringCheck::Kind::Monochrome, {}, e};
  return {};
}

FiniteSet color_class(const SimpleGraph& g, const Coloring& c, int color) {
  std::vector<Token> out;
  for (const Token& v : g.vertices()) {
    auto it = c.color.find(v);
    if (it != c.color.end() && it->second == color) out.push_back(v);
  }
  return FiniteSet::of(std::move(out));
}

bool is_bipartition(const SimpleGraph& g, const Coloring& c) {
  if (!validate_coloring(g, c).ok()) return false;
  for (const Token& v : g.vertices()) {
    int col = c.color.at(v);
    if (col != 0 && col != 1) return false;
  }
  return true;
}

MatchingCheck validate_matching(const SimpleGraph& g,
                                const std::vector<EdgePair>& edges) {
  for (const EdgePair& e : edges) {
    if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
      return {MatchingCheck::Kind::NotAnEdge, e, {}};
  }
  std::map<Token, EdgePair> covered;
  for (const EdgePair& e : edges) {
    for (const Token& v : {e.lo, e.hi}) {
      auto [it, inserted] = covered.emplace(v, e);
      if (!inserted && it->second != e)
        return {MatchingCheck::Kind::SharedVertex, {}, v};
    }
  }
  return {};
}

SaturationCheck saturates(const GraphMatching& m, const FiniteSet& subset) {
  for (const Token& v : subset) {
    bool covered = std::any_of(m.edges.begin(), m.edges.end(),
                               [&](const EdgePair& e) { return e.incident(v); });
    if (!covered) return {false, v};
  }
  return {};
}

std::variant<GraphMatching, FiniteSet> hall_bipartite(const SimpleGraph& g,
                                                      const Coloring& b) {
  if (!is_bipartition(g, b))
    throw InvalidColoring("hall_bipartite needs a valid {0,1} coloring");
  FiniteSet class0 = color_class(g, b, 0);
  FiniteSet class1 = color_class(g, b, 1);

  // Every edge crosses the classes, so adjacency restricted across the
  // bipartition is exactly a relation class0 -> class1.
  std::vector<std::pair<Token, Token>> pairs;
  pairs.reserve(g.edges().size());
  for (const EdgePair& e : g.edges()) {
    if (b.color.at(e.lo) == 0)
      pairs.emplace_back(e.lo, e.hi);
    else
      pairs.emplace_back(e.hi, e.lo);
  }
  auto rel = FiniteRelation::of(class0.members(), class1.members(),
                                std::move(pairs));
  SolveOutcome outcome = solve_relation(rel);
  if (!outcome.matched()) {
    // Report the alternating-path witness: the full set of class-0
    // vertices reachable from the unsaturated ones, whose neighborhood
    // is pinned under a maximum matching.
    return *deficiency_witness(family_of_relation(rel));
  }

  GraphMatching m;
  for (const auto& [a, fa] : outcome.matching().assignment)
    m.edges.push_back(EdgePair::of(a, fa));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::variant<CarriedFunction, FiniteSet> find_carried_function(
    const SimpleGraph& g) {
  std::map<Token, EdgePair> by_token;
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  entries.reserve(g.vertices().card());
  for (const Token& v : g.vertices()) {
    std::vector<Token> incident;
    for (const EdgePair& e : incidence_set(g, v)) {
      Token t = edge_token(e);
      by_token.emplace(t, e);
      incident.push_back(std::move(t));
    }
    entries.emplace_back(v, std::move(incident));
  }
  SolveOutcome outcome = solve_inductive(IndexedFamily::of(entries));
  if (!outcome.matched()) return outcome.violation().subset;

  CarriedFunction f;
  for (const auto& [v, t] : outcome.matching().assignment)
    f.next[v] = by_token.at(t).other(v);
  return f;
}

}  // namespace hall
