#pragma once

#include <optional>
#include <variant>

#include "hall/family.hpp"

namespace hall {

/// Hard cap for the inductive solver and its exhaustive subroutines.
inline constexpr std::size_t kInductiveIndexCap = 20;

/// Either a saturating matching or a re-verifiable Hall violation.
struct SolveOutcome {
  std::variant<Transversal, HallWitness> result;

  bool matched() const { return std::holds_alternative<Transversal>(result); }
  const Transversal& matching() const { return std::get<Transversal>(result); }
  const HallWitness& violation() const { return std::get<HallWitness>(result); }
};

/// Nonempty proper index subset whose image has exactly its cardinality.
struct TightSet {
  FiniteSet subset;
  FiniteSet image;
};

/// Constructive solver following the strong induction on |indices|:
/// empty and singleton base cases, otherwise split on whether a tight
/// set exists (fix least index/element and recurse, or recurse on the
/// tight set and on its complement with the image removed).  Returns a
/// matching exactly when the Hall condition holds; otherwise the
/// violation witness.  Throws CapExceeded above kInductiveIndexCap —
/// use solve_augmenting for large instances.
SolveOutcome solve_inductive(const IndexedFamily& family);

/// Least (by size, then lex) nonempty proper subset S with
/// |S| = |⋃_{i∈S} X_i|, or absent when every proper nonempty subset is
/// strictly slack.  Requires the Hall condition (PreconditionViolated)
/// and at least two indices (ContractViolation).
std::optional<TightSet> find_tight_set(const IndexedFamily& family);

/// Family over `keep` with every set cut down by `forbid`.
IndexedFamily restrict_family(const IndexedFamily& family,
                              const FiniteSet& keep, const FiniteSet& forbid);

/// Maximum-matching solver (Hopcroft–Karp over the index/element
/// bipartite graph); yields a Transversal iff the maximum matching
/// saturates every index.  Deterministic under token order.
std::optional<Transversal> solve_augmenting(const IndexedFamily& family);

/// Absent iff solve_augmenting saturates; otherwise the index set
/// reachable by alternating paths from the unsaturated indices under a
/// maximum matching, which always violates the Hall condition.
std::optional<FiniteSet> deficiency_witness(const IndexedFamily& family);

}  // namespace hall
