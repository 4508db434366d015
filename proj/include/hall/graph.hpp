#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hall/solver.hpp"

namespace hall {

/// Unordered vertex pair stored as (min, max); never a loop.
struct EdgePair {
  Token lo;
  Token hi;

  /// Orders the endpoints; throws SelfLoop when v == w.
  static EdgePair of(Token v, Token w);

  bool incident(const Token& v) const { return v == lo || v == hi; }
  const Token& other(const Token& v) const { return v == lo ? hi : lo; }

  bool operator==(const EdgePair&) const = default;
  auto operator<=>(const EdgePair&) const = default;
};

/// Symmetric irreflexive adjacency over an ordered vertex universe,
/// held as the canonical set of unordered pairs.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Collapses duplicate/reversed edges; rejects loops and edges with
  /// endpoints outside the vertex list.
  static SimpleGraph of(std::vector<Token> vertices,
                        const std::vector<std::pair<Token, Token>>& edges);

  const FiniteSet& vertices() const { return vertices_; }
  const std::vector<EdgePair>& edges() const { return edges_; }
  bool adjacent(const Token& v, const Token& w) const;

 private:
  FiniteSet vertices_;
  std::vector<EdgePair> edges_;  // sorted, duplicate-free
};

inline SimpleGraph make_graph(
    std::vector<Token> vertices,
    const std::vector<std::pair<Token, Token>>& edges) {
  return SimpleGraph::of(std::move(vertices), edges);
}

FiniteSet neighbor_set(const SimpleGraph& g, const Token& v);

/// Γ(S): vertices adjacent to at least one member of S.
FiniteSet neighbor_set_image(const SimpleGraph& g, const FiniteSet& subset);

std::size_t degree(const SimpleGraph& g, const Token& v);

/// Edges incident to v, in edge order.
std::vector<EdgePair> incidence_set(const SimpleGraph& g, const Token& v);

/// Vertex coloring; colors are small integer tokens.
struct Coloring {
  std::map<Token, int> color;
};

struct ColoringCheck {
  enum class Kind { Ok, Uncolored, Monochrome };
  Kind kind = Kind::Ok;
  Token vertex;                  // for Uncolored
  std::optional<EdgePair> edge;  // least monochromatic edge

  bool ok() const { return kind == Kind::Ok; }
};

/// Accepts iff the coloring is total and no edge is monochromatic.
ColoringCheck validate_coloring(const SimpleGraph& g, const Coloring& c);

/// Vertices with the given color.
FiniteSet color_class(const SimpleGraph& g, const Coloring& c, int color);

/// Valid coloring whose colors all lie in {0, 1}.
bool is_bipartition(const SimpleGraph& g, const Coloring& c);

struct GraphMatching {
  std::vector<EdgePair> edges;  // sorted, duplicate-free
};

struct MatchingCheck {
  enum class Kind { Ok, NotAnEdge, SharedVertex };
  Kind kind = Kind::Ok;
  std::optional<EdgePair> edge;  // offending edge for NotAnEdge
  Token vertex;                  // shared endpoint for SharedVertex

  bool ok() const { return kind == Kind::Ok; }
};

MatchingCheck validate_matching(const SimpleGraph& g,
                                const std::vector<EdgePair>& edges);

struct SaturationCheck {
  bool ok = true;
  Token unsaturated;  // first vertex of S not covered
};

SaturationCheck saturates(const GraphMatching& m, const FiniteSet& subset);

/// Matching saturating color class 0, or a violating subset S of class
/// 0 with |S| > |Γ(S)|.  Throws InvalidColoring unless the coloring is
/// a valid bipartition; CapExceeded propagates from the solver.
std::variant<GraphMatching, FiniteSet> hall_bipartite(const SimpleGraph& g,
                                                      const Coloring& b);

/// Self-map sending each vertex to a neighbor, injective as a map
/// vertex ↦ incident edge.
struct CarriedFunction {
  std::map<Token, Token> next;
};

/// Solves Hall on the vertex ↦ incidence-edge family: each vertex picks
/// a distinct incident edge, whose far endpoint is next(v).  On failure
/// returns a vertex subset U with more members than edges touching it.
std::variant<CarriedFunction, FiniteSet> find_carried_function(
    const SimpleGraph& g);

/// Canonical token for an edge, usable as a family element.
Token edge_token(const EdgePair& e);

}  // namespace hall
