#include "hall/types.hpp"

#include <algorithm>
#include <iterator>

namespace hall {

FiniteSet FiniteSet::of(std::vector<Token> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  FiniteSet s;
  s.members_ = std::move(xs);
  return s;
}

FiniteSet FiniteSet::single(Token x) { return of({std::move(x)}); }

bool FiniteSet::contains(const Token& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

FiniteSet FiniteSet::unite(const FiniteSet& other) const {
  FiniteSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

FiniteSet FiniteSet::subtract(const FiniteSet& other) const {
  FiniteSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

FiniteSet FiniteSet::intersect(const FiniteSet& other) const {
  FiniteSet out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

const Token& FiniteSet::least() const {
  if (members_.empty()) throw ContractViolation("least() on empty set");
  return members_.front();
}

}  // namespace hall
