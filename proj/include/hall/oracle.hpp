#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hall/graph.hpp"
#include "hall/koenig.hpp"

// Brute-force oracles and seeded instance generators.  Intentionally
// naive; used by the property suites and the CLI's --verify mode, and
// kept independent of the solver implementations they check.

namespace hall::oracle {

/// Lex-least valid transversal by exhaustive search over all injective
/// assignments, or absent.  Caps: ≤ 8 indices, ≤ 8 universe elements.
std::optional<Transversal> brute_force_transversal(const IndexedFamily& family);

/// Every subset J with |J| > |⋃_{i∈J} X_i|, in (size, lex) order.
/// Cap: ≤ 20 indices.
std::vector<FiniteSet> enumerate_subset_violations(const IndexedFamily& family);

/// Lex-least coherent chain by filtering the full level product.
/// Cap: product of level sizes ≤ 100000.
std::optional<Chain> brute_force_chain(const InverseSystem& sys);

/// Lex-least adjacency-respecting function with an injective edge map.
/// Cap: ≤ 5 vertices.
std::optional<CarriedFunction> brute_force_carried(const SimpleGraph& g);

/// Independent inclusion of each (index, element) pair with the given
/// probability; bit-for-bit reproducible per seed.
IndexedFamily random_family(std::uint64_t seed, std::size_t index_count,
                            std::size_t universe_size, double density);

/// Bipartite graph on left/right vertex blocks (colors 0/1) with
/// independent cross edges.
std::pair<SimpleGraph, Coloring> random_bipartite(std::uint64_t seed,
                                                  std::size_t left_count,
                                                  std::size_t right_count,
                                                  double density);

}  // namespace hall::oracle
