#include "subset_enum.hpp"

#include <algorithm>
#include <bit>

namespace hall::detail {

BitFamily BitFamily::of(const IndexedFamily& family) {
  BitFamily bf;
  bf.n = family.size();
  bf.index_tokens = family.indices().members();
  const auto& universe = family.universe().members();
  bf.words = (universe.size() + 63) / 64;
  bf.rows.assign(bf.n, std::vector<std::uint64_t>(bf.words, 0));
  for (std::size_t p = 0; p < bf.n; ++p) {
    for (const Token& e : family.set_of(bf.index_tokens[p])) {
      auto it = std::lower_bound(universe.begin(), universe.end(), e);
      std::size_t pos = static_cast<std::size_t>(it - universe.begin());
      bf.rows[p][pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }
  return bf;
}

std::size_t BitFamily::union_card(
    const std::vector<std::size_t>& positions) const {
  std::size_t count = 0;
  if (words == 0) return 0;
  if (words == 1) {
    std::uint64_t acc = 0;
    for (std::size_t p : positions) acc |= rows[p][0];
    return static_cast<std::size_t>(std::popcount(acc));
  }
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = 0;
    for (std::size_t p : positions) acc |= rows[p][w];
    count += static_cast<std::size_t>(std::popcount(acc));
  }
  return count;
}

FiniteSet tokens_at(const BitFamily& bf,
                    const std::vector<std::size_t>& positions) {
  std::vector<Token> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(bf.index_tokens[p]);
  return FiniteSet::of(std::move(out));
}

}  // namespace hall::detail
