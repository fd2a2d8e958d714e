#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"

namespace georeduce::harness {
namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

combinat::Graph random_degree3_graph(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "random graph needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degree(n, 0);
  std::set<combinat::Edge> edges;
  for (std::size_t attempt = 0; attempt < 3 * n; ++attempt) {
    std::size_t u = draw(rng, n);
    std::size_t v = draw(rng, n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (degree[u] >= 3 || degree[v] >= 3 || edges.count({u, v})) continue;
    edges.insert({u, v});
    ++degree[u];
    ++degree[v];
  }
  return combinat::Graph(n, {edges.begin(), edges.end()});
}

combinat::SetSystem random_set_system(std::size_t n, std::size_t m,
                                      std::uint64_t seed) {
  if (n == 0 || m == 0 || 3 * m < n || m > 4 * n) {
    throw Error(ErrorCode::kInvalidInput,
                "random set system needs n >= 1 and ceil(n/3) <= m <= 4n");
  }
  constexpr std::size_t kSize = 3;
  constexpr std::size_t kFreq = 4;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> sets(m);
  std::vector<std::size_t> freq(n, 0);
  auto put = [&](std::size_t set, std::size_t e) {
    sets[set].push_back(e);
    ++freq[e];
  };
  auto contains = [&](std::size_t set, std::size_t e) {
    return std::find(sets[set].begin(), sets[set].end(), e) != sets[set].end();
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with modulo draws.
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);

  // Every set gets one element and every element one set.
  for (std::size_t i = 0; i < n; ++i) {
    if (i < m) {
      put(i, order[i]);
      continue;
    }
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < m; ++j) {
      if (sets[j].size() < kSize) open.push_back(j);
    }
    put(open[draw(rng, open.size())], order[i]);
  }
  for (std::size_t j = n; j < m; ++j) {
    std::vector<std::size_t> open;
    for (std::size_t e = 0; e < n; ++e) {
      if (freq[e] < kFreq) open.push_back(e);
    }
    put(j, open[draw(rng, open.size())]);
  }

  // Extra incidences, at most one attempt per free slot.
  for (std::size_t j = 0; j < m; ++j) {
    while (sets[j].size() < kSize && draw(rng, 2) == 0) {
      std::vector<std::size_t> open;
      for (std::size_t e = 0; e < n; ++e) {
        if (freq[e] < kFreq && !contains(j, e)) open.push_back(e);
      }
      if (open.empty()) break;
      put(j, open[draw(rng, open.size())]);
    }
  }
  return combinat::make_set_system(n, std::move(sets), kSize, kFreq);
}

}  // namespace georeduce::harness
