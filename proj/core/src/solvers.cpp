#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "georeduce/combinat.hpp"
#include "georeduce/errors.hpp"

namespace georeduce::combinat {
namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<Mask> set_masks(const SetSystem& s) {
  std::vector<Mask> masks;
  masks.reserve(s.sets.size());
  for (const auto& set : s.sets) {
    Mask m = 0;
    for (std::size_t e : set) m |= bit(e);
    masks.push_back(m);
  }
  return masks;
}

void check_coverable(const SetSystem& s) {
  std::vector<bool> seen(s.n, false);
  for (const auto& set : s.sets) {
    for (std::size_t e : set) seen[e] = true;
  }
  for (std::size_t e = 0; e < s.n; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kUncoverableElement,
                  "element " + std::to_string(e) + " is in no set");
    }
  }
}

class CoverSearch {
 public:
  CoverSearch(const SetSystem& s, std::vector<std::size_t> incumbent)
      : masks_(set_masks(s)),
        full_(s.n == 0 ? 0 : (bit(s.n) - 1)),
        containing_(s.n),
        best_(std::move(incumbent)) {
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
      for (std::size_t e : s.sets[i]) containing_[e].push_back(i);
    }
  }

  std::vector<std::size_t> run() {
    std::vector<std::size_t> chosen;
    search(0, chosen);
    return best_;
  }

 private:
  std::size_t lower_bound(Mask covered) const {
    const Mask open = full_ & ~covered;
    const int remaining = std::popcount(open);
    if (remaining == 0) return 0;
    int widest = 0;
    for (Mask m : masks_) widest = std::max(widest, std::popcount(m & open));
    return static_cast<std::size_t>((remaining + widest - 1) / widest);
  }

  void search(Mask covered, std::vector<std::size_t>& chosen) {
    if (covered == full_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(covered) >= best_.size()) return;

    // Branch on the uncovered element with the fewest candidate sets.
    std::size_t pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t e = 0; e < containing_.size(); ++e) {
      if (covered & bit(e)) continue;
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        pick = e;
      }
    }
    for (std::size_t i : containing_[pick]) {
      chosen.push_back(i);
      search(covered | masks_[i], chosen);
      chosen.pop_back();
    }
  }

  std::vector<Mask> masks_;
  Mask full_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> best_;
};

}  // namespace

CoverSolution greedy_set_cover(const SetSystem& s) {
  if (s.n >= 64) {
    throw Error(ErrorCode::kBudgetExceeded, "greedy cover supports 63 elements");
  }
  check_coverable(s);
  const auto masks = set_masks(s);
  const Mask full = s.n == 0 ? 0 : bit(s.n) - 1;
  Mask covered = 0;
  CoverSolution out;
  while (covered != full) {
    std::size_t best = 0;
    int gain = -1;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const int g = std::popcount(masks[i] & ~covered);
      if (g > gain) {
        gain = g;
        best = i;
      }
    }
    covered |= masks[best];
    out.chosen.push_back(best);
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  out.size = out.chosen.size();
  return out;
}

CoverSolution exact_min_set_cover(const SetSystem& s) {
  if (s.n > kMaxCoverElements || s.sets.size() > kMaxCoverSets) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exact cover is capped at " + std::to_string(kMaxCoverElements) +
                    " elements and " + std::to_string(kMaxCoverSets) + " sets");
  }
  CoverSolution greedy = greedy_set_cover(s);
  CoverSearch search(s, greedy.chosen);
  CoverSolution out;
  out.chosen = search.run();
  std::sort(out.chosen.begin(), out.chosen.end());
  out.size = out.chosen.size();
  out.optimal = true;
  return out;
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : adj_(g.num_vertices(), 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
  }

  Mask solve(Mask mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    const Mask comp = component(mask);
    Mask best;
    if (comp != mask) {
      best = solve(comp) | solve(mask & ~comp);
    } else {
      std::size_t v = 0;
      int deg = -1;
      for (Mask m = mask; m; m &= m - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(m));
        const int d = std::popcount(adj_[u] & mask);
        if (d > deg) {
          deg = d;
          v = u;
        }
      }
      if (deg == 0) {
        best = mask;
      } else {
        const Mask with = bit(v) | solve(mask & ~bit(v) & ~adj_[v]);
        const Mask without = solve(mask & ~bit(v));
        best = std::popcount(without) > std::popcount(with) ? without : with;
      }
    }
    memo_.emplace(mask, best);
    return best;
  }

 private:
  Mask component(Mask mask) const {
    Mask seen = mask & (~mask + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) {
        next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
      }
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::vector<Mask> adj_;
  std::unordered_map<Mask, Mask> memo_;
};

}  // namespace

IndependentSet exact_max_independent_set(const Graph& g) {
  if (g.num_vertices() > kMaxIndependentSetVertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exact independent set is capped at " +
                    std::to_string(kMaxIndependentSetVertices) + " vertices");
  }
  IndependentSetSearch search(g);
  const Mask all = g.num_vertices() == 0 ? 0 : bit(g.num_vertices()) - 1;
  const Mask best = search.solve(all);
  IndependentSet out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (best & bit(v)) out.vertices.push_back(v);
  }
  out.size = out.vertices.size();
  return out;
}

}  // namespace georeduce::combinat
