#pragma once

#include <utility>
#include <vector>

#include "hall/solver.hpp"

namespace hall {

/// Finite relation between declared left/right universes, stored as a
/// canonical set of related pairs.
class FiniteRelation {
 public:
  FiniteRelation() = default;

  /// Validates that every pair lies in the universes; duplicates collapse.
  static FiniteRelation of(std::vector<Token> left, std::vector<Token> right,
                           std::vector<std::pair<Token, Token>> pairs);

  const FiniteSet& left() const { return left_; }
  const FiniteSet& right() const { return right_; }
  const std::vector<std::pair<Token, Token>>& pairs() const { return pairs_; }

 private:
  FiniteSet left_;
  FiniteSet right_;
  std::vector<std::pair<Token, Token>> pairs_;  // sorted, duplicate-free
};

/// r(A) = {b | some a in A related to b}; A must lie in the left universe.
FiniteSet image_rel(const FiniteRelation& rel, const FiniteSet& subset);

/// Index set = left universe, X_a = r({a}); bind_union on the result
/// equals image_rel on the relation for every subset.
IndexedFamily family_of_relation(const FiniteRelation& rel);

/// Hall's theorem in relation form: an injective relation-respecting
/// f : left → right, or a violating subset of the left universe.
SolveOutcome solve_relation(const FiniteRelation& rel);

}  // namespace hall
