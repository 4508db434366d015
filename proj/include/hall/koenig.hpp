#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hall/solver.hpp"

namespace hall {

/// ℕ-indexed inverse system of finite sets, truncated to a finite
/// horizon H: levels X_0..X_H with one level-lowering step map, valid
/// when x ∈ X_{n+1} implies step(x) ∈ X_n.
class InverseSystem {
 public:
  /// Validates level-compatibility exhaustively; a missing step entry
  /// for a used element is reported as the same FpropViolation.
  static InverseSystem of(std::vector<FiniteSet> levels,
                          std::map<Token, Token> step);

  std::size_t horizon() const { return levels_.size() - 1; }
  const FiniteSet& level(std::size_t n) const;
  const std::vector<FiniteSet>& levels() const { return levels_; }

  /// Step image of an element of some X_{n+1}.
  const Token& step(const Token& x) const;
  const std::map<Token, Token>& step_map() const { return step_; }

 private:
  InverseSystem() = default;
  std::vector<FiniteSet> levels_;
  std::map<Token, Token> step_;
};

/// One element per level, coherent under the step map.
struct Chain {
  std::vector<Token> entries;  // s_0 .. s_H

  bool operator==(const Chain&) const = default;
};

/// Image of X_{n+k} inside X_n under the k-fold step; k = 0 gives X_n.
/// Throws HorizonExceeded when n + k passes the horizon.
FiniteSet extendable_set(const InverseSystem& sys, std::size_t n,
                         std::size_t k);

/// Replaces each level by the elements extendable all the way to the
/// horizon; in the result every step between consecutive levels is
/// surjective onto the level below.
InverseSystem prune_to_extendable(const InverseSystem& sys);

/// Finite-horizon König construction: prune, then take the least
/// element of level 0 and repeatedly choose least lifts.  Absent iff a
/// pruned level is empty (equivalently, some original level is empty).
std::optional<Chain> find_chain(const InverseSystem& sys);

/// Countable family of finite sets, queried one ℕ index at a time.
/// The generator must be deterministic.
class LazyFamily {
 public:
  explicit LazyFamily(std::function<FiniteSet(std::size_t)> generator)
      : generator_(std::move(generator)) {}

  FiniteSet at(std::size_t n) const { return generator_(n); }

 private:
  std::function<FiniteSet(std::size_t)> generator_;
};

/// Decimal index token for level/lazy-family positions.
Token nat_token(std::size_t n);

/// Transversal on indices 0..n-1 that extends to the first `horizon`
/// indices, obtained by solving Hall on the horizon prefix and
/// restricting; a failed Hall condition on the prefix yields the
/// witness instead.  Requires horizon ≥ n.
SolveOutcome infinite_hall_prefix(const LazyFamily& family, std::size_t n,
                                  std::size_t horizon);

}  // namespace hall
