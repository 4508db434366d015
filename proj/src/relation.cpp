#include "hall/relation.hpp"

#include <algorithm>

namespace hall {

FiniteRelation FiniteRelation::of(std::vector<Token> left,
                                  std::vector<Token> right,
                                  std::vector<std::pair<Token, Token>> pairs) {
  FiniteRelation rel;
  rel.left_ = FiniteSet::of(std::move(left));
  rel.right_ = FiniteSet::of(std::move(right));
  for (const auto& [a, b] : pairs) {
    if (!rel.left_.contains(a)) throw UnknownIndex(a);
    if (!rel.right_.contains(b)) throw UnknownElement(b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  rel.pairs_ = std::move(pairs);
  return rel;
}

FiniteSet image_rel(const FiniteRelation& rel, const FiniteSet& subset) {
  if (!subset.subset_of(rel.left()))
    throw UnknownIndex(subset.subtract(rel.left()).least());
  std::vector<Token> out;
  for (const auto& [a, b] : rel.pairs())
    if (subset.contains(a)) out.push_back(b);
  return FiniteSet::of(std::move(out));
}

IndexedFamily family_of_relation(const FiniteRelation& rel) {
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  entries.reserve(rel.left().card());
  // pairs are sorted by left component, so one sweep fills the sets
  auto pair_it = rel.pairs().begin();
  for (const Token& a : rel.left()) {
    std::vector<Token> elements;
    while (pair_it != rel.pairs().end() && pair_it->first == a) {
      elements.push_back(pair_it->second);
      ++pair_it;
    }
    entries.emplace_back(a, std::move(elements));
  }
  return IndexedFamily::of(entries);
}

SolveOutcome solve_relation(const FiniteRelation& rel) {
  return solve_inductive(family_of_relation(rel));
}

}  // namespace hall
