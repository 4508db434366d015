#include "hall/koenig.hpp"

namespace hall {

Token nat_token(std::size_t n) { return std::to_string(n); }

InverseSystem InverseSystem::of(std::vector<FiniteSet> levels,
                                std::map<Token, Token> step) {
  if (levels.empty())
    throw ContractViolation("inverse system needs at least level X_0");
  InverseSystem sys;
  sys.levels_ = std::move(levels);
  sys.step_ = std::move(step);
  for (std::size_t n = 0; n + 1 < sys.levels_.size(); ++n) {
    for (const Token& x : sys.levels_[n + 1]) {
      auto it = sys.step_.find(x);
      if (it == sys.step_.end() || !sys.levels_[n].contains(it->second))
        throw FpropViolation(n, x);
    }
  }
  return sys;
}

const FiniteSet& InverseSystem::level(std::size_t n) const {
  if (n >= levels_.size())
    throw HorizonExceeded("level " + std::to_string(n) + " beyond horizon");
  return levels_[n];
}

const Token& InverseSystem::step(const Token& x) const {
  auto it = step_.find(x);
  if (it == step_.end()) throw UnknownElement(x);
  return it->second;
}

FiniteSet extendable_set(const InverseSystem& sys, std::size_t n,
                         std::size_t k) {
  if (n + k > sys.horizon())
    throw HorizonExceeded("lookahead " + std::to_string(k) + " from level " +
                          std::to_string(n) + " passes the horizon");
  FiniteSet image = sys.level(n + k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Token> mapped;
    mapped.reserve(image.card());
    for (const Token& x : image) mapped.push_back(sys.step(x));
    image = FiniteSet::of(std::move(mapped));
  }
  return image;
}

InverseSystem prune_to_extendable(const InverseSystem& sys) {
  std::vector<FiniteSet> pruned;
  pruned.reserve(sys.horizon() + 1);
  for (std::size_t n = 0; n <= sys.horizon(); ++n)
    pruned.push_back(extendable_set(sys, n, sys.horizon() - n));
  return InverseSystem::of(std::move(pruned), sys.step_map());
}

std::optional<Chain> find_chain(const InverseSystem& sys) {
  InverseSystem pruned = prune_to_extendable(sys);
  for (std::size_t n = 0; n <= pruned.horizon(); ++n)
    if (pruned.level(n).empty()) return std::nullopt;

  // Steps of the pruned system are surjective level-to-level, so a
  // least lift always exists.
  Chain chain;
  chain.entries.push_back(pruned.level(0).least());
  for (std::size_t n = 1; n <= pruned.horizon(); ++n) {
    const Token& below = chain.entries.back();
    const Token* lift = nullptr;
    for (const Token& y : pruned.level(n)) {
      if (pruned.step(y) == below) {
        lift = &y;
        break;
      }
    }
    if (lift == nullptr)
      throw Error("pruned system lost surjectivity (internal)");
    chain.entries.push_back(*lift);
  }
  return chain;
}

SolveOutcome infinite_hall_prefix(const LazyFamily& family, std::size_t n,
                                  std::size_t horizon) {
  if (horizon < n)
    throw ContractViolation("infinite_hall_prefix needs horizon >= n");
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  entries.reserve(horizon);
  for (std::size_t i = 0; i < horizon; ++i)
    entries.emplace_back(nat_token(i), family.at(i).members());
  IndexedFamily prefix = IndexedFamily::of(entries);

  HallReport report = check_hall_condition(prefix);
  if (!report.satisfied()) return {*report.witness};

  Transversal full;
  if (prefix.size() <= kInductiveIndexCap) {
    full = solve_inductive(prefix).matching();
  } else {
    full = *solve_augmenting(prefix);
  }

  Transversal out;
  for (std::size_t i = 0; i < n; ++i) {
    Token t = nat_token(i);
    out.assignment[t] = full.assignment.at(t);
  }
  return {std::move(out)};
}

}  // namespace hall
