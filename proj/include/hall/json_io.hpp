#pragma once

#include <optional>
#include <utility>

#include <json.hpp>

#include "hall/graph.hpp"
#include "hall/koenig.hpp"
#include "hall/relation.hpp"

// JSON file schemas used by the CLI:
//   family    {"universe": ["a"], "family": {"0": ["a"]}}
//   relation  {"left": ["0"], "right": ["a"], "pairs": [["0","a"]]}
//   graph     {"vertices": ["u","v"], "edges": [["u","v"]],
//              "colors": {"u": 0, "v": 1}}           (colors optional)
//   system    {"levels": [["a","b"],["a"]], "step": {"a":"a","b":"a"}}

namespace hall::io {

using nlohmann::json;

/// Elements outside the declared universe are rejected.
IndexedFamily load_family(const json& j);

FiniteRelation load_relation(const json& j);

std::pair<SimpleGraph, std::optional<Coloring>> load_graph(const json& j);

InverseSystem load_system(const json& j);

/// True when the document carries relation keys rather than family keys.
bool looks_like_relation(const json& j);

json family_json(const IndexedFamily& family);
json matching_json(const Transversal& t);
json subset_json(const FiniteSet& s);
json edges_json(const std::vector<EdgePair>& edges);
json chain_json(const Chain& c);
json function_json(const CarriedFunction& f);

}  // namespace hall::io
