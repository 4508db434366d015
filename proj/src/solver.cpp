#include "hall/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "subset_enum.hpp"

namespace hall {

namespace {

std::optional<TightSet> tight_set_unchecked(const IndexedFamily& family) {
  auto bf = detail::BitFamily::of(family);
  std::optional<TightSet> found;
  if (bf.n < 2) return found;
  detail::for_each_subset_by_size(
      bf.n, bf.n - 1, [&](const std::vector<std::size_t>& positions) {
        if (positions.size() == bf.union_card(positions)) {
          FiniteSet subset = detail::tokens_at(bf, positions);
          found = TightSet{subset, bind_union(family, subset)};
          return true;
        }
        return false;
      });
  return found;
}

// Index/element bipartite view with dense ids in token order.
struct BipartiteView {
  std::vector<Token> left;   // indices
  std::vector<Token> right;  // elements
  std::vector<std::vector<int>> adj;

  explicit BipartiteView(const IndexedFamily& family)
      : left(family.indices().members()),
        right(family.universe().members()) {
    adj.resize(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      const auto& set = family.set_of(left[i]).members();
      adj[i].reserve(set.size());
      for (const Token& e : set) {
        auto it = std::lower_bound(right.begin(), right.end(), e);
        adj[i].push_back(static_cast<int>(it - right.begin()));
      }
    }
  }
};

// Hopcroft-Karp maximum matching; deterministic under the fixed
// adjacency order.
struct HopcroftKarp {
  const BipartiteView& g;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const BipartiteView& view)
      : g(view),
        match_left(view.left.size(), -1),
        match_right(view.right.size(), -1),
        dist(view.left.size(), 0) {}

  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < g.left.size(); ++u) {
      if (match_left[u] == -1) {
        dist[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        int w = match_right[v];
        if (w == -1) {
          reachable_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int v : g.adj[u]) {
      int w = match_right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (std::size_t u = 0; u < g.left.size(); ++u)
        if (match_left[u] == -1) dfs(static_cast<int>(u));
    }
  }
};

}  // namespace

std::optional<TightSet> find_tight_set(const IndexedFamily& family) {
  if (family.size() < 2)
    throw ContractViolation("find_tight_set requires at least two indices");
  if (!check_hall_condition(family).satisfied())
    throw PreconditionViolated("find_tight_set: Hall condition fails");
  return tight_set_unchecked(family);
}

IndexedFamily restrict_family(const IndexedFamily& family,
                              const FiniteSet& keep, const FiniteSet& forbid) {
  std::vector<std::pair<Token, std::vector<Token>>> entries;
  entries.reserve(keep.card());
  for (const Token& i : keep)
    entries.emplace_back(i, family.set_of(i).subtract(forbid).members());
  return IndexedFamily::of(entries);
}

SolveOutcome solve_inductive(const IndexedFamily& family) {
  if (family.size() > kInductiveIndexCap)
    throw CapExceeded("solve_inductive capped at " +
                      std::to_string(kInductiveIndexCap) +
                      " indices; use solve_augmenting");
  HallReport report = check_hall_condition(family);
  if (!report.satisfied()) return {*report.witness};

  // The recursion of the induction proof, run as an explicit work
  // stack.  Every pushed family satisfies the Hall condition, so the
  // merged assignments form a transversal.
  Transversal out;
  std::vector<IndexedFamily> work{family};
  while (!work.empty()) {
    IndexedFamily f = std::move(work.back());
    work.pop_back();
    if (f.size() == 0) continue;
    if (f.size() == 1) {
      const Token& a = f.indices().least();
      out.assignment[a] = f.set_of(a).least();
      continue;
    }
    auto tight = tight_set_unchecked(f);
    if (!tight) {
      // Case 1: every proper nonempty subset is strictly slack, so
      // fixing the least index to its least element keeps the
      // condition after deleting that element everywhere.
      const Token& a = f.indices().least();
      const Token& b = f.set_of(a).least();
      out.assignment[a] = b;
      work.push_back(restrict_family(f, f.indices().subtract(FiniteSet::single(a)),
                                     FiniteSet::single(b)));
    } else {
      // Case 2: solve the tight set against its own image and the
      // complement with the image removed; the value ranges are
      // disjoint, so the union of the two matchings is injective.
      work.push_back(restrict_family(f, tight->subset, {}));
      work.push_back(restrict_family(f, f.indices().subtract(tight->subset),
                                     tight->image));
    }
  }
  return {std::move(out)};
}

std::optional<Transversal> solve_augmenting(const IndexedFamily& family) {
  BipartiteView view(family);
  HopcroftKarp hk(view);
  hk.run();
  Transversal t;
  for (std::size_t u = 0; u < view.left.size(); ++u) {
    if (hk.match_left[u] == -1) return std::nullopt;
    t.assignment[view.left[u]] = view.right[hk.match_left[u]];
  }
  return t;
}

std::optional<FiniteSet> deficiency_witness(const IndexedFamily& family) {
  BipartiteView view(family);
  HopcroftKarp hk(view);
  hk.run();

  std::vector<char> seen_left(view.left.size(), 0);
  std::vector<char> seen_right(view.right.size(), 0);
  std::queue<int> q;
  for (std::size_t u = 0; u < view.left.size(); ++u) {
    if (hk.match_left[u] == -1) {
      seen_left[u] = 1;
      q.push(static_cast<int>(u));
    }
  }
  if (q.empty()) return std::nullopt;

  // Alternating reachability: any edge leftwards, matching edge back.
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : view.adj[u]) {
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      int w = hk.match_right[v];
      if (w != -1 && !seen_left[w]) {
        seen_left[w] = 1;
        q.push(w);
      }
    }
  }

  std::vector<Token> subset;
  for (std::size_t u = 0; u < view.left.size(); ++u)
    if (seen_left[u]) subset.push_back(view.left[u]);
  return FiniteSet::of(std::move(subset));
}

}  // namespace hall
