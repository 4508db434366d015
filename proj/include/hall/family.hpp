#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hall/types.hpp"

namespace hall {

/// Finite indexed family of finite sets: i ↦ X_i over ordered index tokens.
class IndexedFamily {
 public:
  IndexedFamily() = default;

  /// Canonicalizes each entry (dedup + sort); rejects repeated indices.
  static IndexedFamily of(
      const std::vector<std::pair<Token, std::vector<Token>>>& entries);

  const FiniteSet& indices() const { return indices_; }
  std::size_t size() const { return indices_.card(); }

  /// X_i; throws UnknownIndex.
  const FiniteSet& set_of(const Token& i) const;

  /// Union of all X_i.
  const FiniteSet& universe() const { return universe_; }

  bool operator==(const IndexedFamily&) const = default;

 private:
  FiniteSet indices_;
  std::map<Token, FiniteSet> sets_;
  FiniteSet universe_;
};

inline IndexedFamily make_family(
    const std::vector<std::pair<Token, std::vector<Token>>>& entries) {
  return IndexedFamily::of(entries);
}

/// ⋃_{i∈J} X_i for J ⊆ indices; throws UnknownIndex otherwise.
FiniteSet bind_union(const IndexedFamily& family, const FiniteSet& subset);

/// Injective choice of one element per index.
struct Transversal {
  std::map<Token, Token> assignment;

  bool operator==(const Transversal&) const = default;
};

enum class Verdict { Satisfied, Violated };

/// A subset J of indices with |J| > |⋃_{i∈J} X_i|.
struct HallWitness {
  FiniteSet subset;
  std::size_t subset_card = 0;
  std::size_t union_card = 0;

  bool operator==(const HallWitness&) const = default;
};

struct HallReport {
  Verdict verdict = Verdict::Satisfied;
  std::optional<HallWitness> witness;

  bool satisfied() const { return verdict == Verdict::Satisfied; }
};

/// Decides the marriage condition: every index subset J has
/// |J| ≤ |⋃_{i∈J} X_i|.  Up to 20 indices the subsets are enumerated
/// exhaustively in (size, lex) order, so a Violated witness is the
/// smallest, lexicographically least violating subset; above that the
/// check delegates to the matching-based deficiency witness.
HallReport check_hall_condition(const IndexedFamily& family);

struct TransversalCheck {
  enum class Kind { Ok, MissingIndex, NotMember, Collision };

  Kind kind = Kind::Ok;
  Token index;        // offending index (MissingIndex / NotMember / first of pair)
  Token other_index;  // second index of a Collision pair

  bool ok() const { return kind == Kind::Ok; }
};

/// Checks totality over the family's indices, membership, and
/// injectivity, in that order; reports the first failing clause.
TransversalCheck verify_transversal(const IndexedFamily& family,
                                    const std::map<Token, Token>& candidate);

}  // namespace hall
