#include "hall/json_io.hpp"

namespace hall::io {

namespace {

std::vector<Token> token_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<Token> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_string())
      throw Error(std::string(what) + " entries must be strings");
    out.push_back(x.get<Token>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

IndexedFamily load_family(const json& j) {
  FiniteSet universe = FiniteSet::of(token_array(field(j, "universe"), "universe"));
  const json& fam = field(j, "family");
  if (!fam.is_object()) throw Error("family must be an object");
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  for (const auto& [index, elements] : fam.items()) {
    std::vector<Token> xs = token_array(elements, "family entry");
    for (const Token& e : xs)
      if (!universe.contains(e)) throw UnknownElement(e);
    entries.emplace_back(index, std::move(xs));
  }
  return IndexedFamily::of(entries);
}

FiniteRelation load_relation(const json& j) {
  std::vector<Token> left = token_array(field(j, "left"), "left");
  std::vector<Token> right = token_array(field(j, "right"), "right");
  const json& jp = field(j, "pairs");
  if (!jp.is_array()) throw Error("pairs must be an array");
  std::vector<std::pair<Token, Token>> pairs;
  pairs.reserve(jp.size());
  for (const auto& p : jp) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
        !p[1].is_string())
      throw Error("each pair must be a [left, right] string pair");
    pairs.emplace_back(p[0].get<Token>(), p[1].get<Token>());
  }
  return FiniteRelation::of(std::move(left), std::move(right),
                            std::move(pairs));
}

std::pair<SimpleGraph, std::optional<Coloring>> load_graph(const json& j) {
  std::vector<Token> vertices = token_array(field(j, "vertices"), "vertices");
  const json& je = field(j, "edges");
  if (!je.is_array()) throw Error("edges must be an array");
  std::vector<std::pair<Token, Token>> edges;
  edges.reserve(je.size());
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw Error("each edge must be a [v, w] string pair");
    edges.emplace_back(e[0].get<Token>(), e[1].get<Token>());
  }
  SimpleGraph g = SimpleGraph::of(std::move(vertices), edges);

  std::optional<Coloring> coloring;
  if (j.contains("colors")) {
    const json& jc = j.at("colors");
    if (!jc.is_object()) throw Error("colors must be an object");
    Coloring c;
    for (const auto& [v, col] : jc.items()) {
      if (!col.is_number_integer()) throw Error("colors must be integers");
      if (!g.vertices().contains(v)) throw UnknownVertex(v);
      c.color[v] = col.get<int>();
    }
    coloring = std::move(c);
  }
  return {std::move(g), std::move(coloring)};
}

InverseSystem load_system(const json& j) {
  const json& jl = field(j, "levels");
  if (!jl.is_array() || jl.empty())
    throw Error("levels must be a nonempty array of arrays");
  std::vector<FiniteSet> levels;
  levels.reserve(jl.size());
  for (const auto& level : jl)
    levels.push_back(FiniteSet::of(token_array(level, "level")));
  const json& js = field(j, "step");
  if (!js.is_object()) throw Error("step must be an object");
  std::map<Token, Token> step;
  for (const auto& [x, fx] : js.items()) {
    if (!fx.is_string()) throw Error("step values must be strings");
    step[x] = fx.get<Token>();
  }
  return InverseSystem::of(std::move(levels), std::move(step));
}

bool looks_like_relation(const json& j) {
  return j.is_object() && j.contains("pairs");
}

json family_json(const IndexedFamily& family) {
  json sets = json::object();
  for (const Token& i : family.indices())
    sets[i] = family.set_of(i).members();
  return {{"universe", family.universe().members()}, {"family", sets}};
}

json matching_json(const Transversal& t) {
  json out = json::object();
  for (const auto& [i, e] : t.assignment) out[i] = e;
  return out;
}

json subset_json(const FiniteSet& s) { return json(s.members()); }

json edges_json(const std::vector<EdgePair>& edges) {
  json out = json::array();
  for (const EdgePair& e : edges) out.push_back({e.lo, e.hi});
  return out;
}

json chain_json(const Chain& c) { return json(c.entries); }

json function_json(const CarriedFunction& f) {
  json out = json::object();
  for (const auto& [v, w] : f.next) out[v] = w;
  return out;
}

}  // namespace hall::io
