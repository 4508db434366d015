#pragma once

// Internal helpers for exhaustive subset enumeration over an indexed
// family, shared by the Hall-condition check, tight-set search, and the
// brute-force oracles.  Subsets are visited in (size, lex) order over
// the sorted index sequence.

#include <cstdint>
#include <vector>

#include "hall/family.hpp"

namespace hall::detail {

// Member sets as bit rows over universe positions.
struct BitFamily {
  std::size_t n = 0;      // index count
  std::size_t words = 0;  // words per row
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<Token> index_tokens;

  static BitFamily of(const IndexedFamily& family);

  // |⋃ rows[p] for p in positions|
  std::size_t union_card(const std::vector<std::size_t>& positions) const;
};

// Visits all nonempty combinations of {0..n-1}, smallest size first,
// lexicographic within a size; max_size caps the subset size.  The
// visitor returns true to stop early; returns whether it stopped.
template <typename Visit>
bool for_each_subset_by_size(std::size_t n, std::size_t max_size,
                             Visit&& visit) {
  std::vector<std::size_t> c;
  for (std::size_t s = 1; s <= max_size; ++s) {
    c.resize(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
      if (visit(static_cast<const std::vector<std::size_t>&>(c))) return true;
      // advance to the next s-combination
      std::size_t i = s;
      while (i > 0 && c[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return false;
}

FiniteSet tokens_at(const BitFamily& bf, const std::vector<std::size_t>& positions);

}  // namespace hall::detail
