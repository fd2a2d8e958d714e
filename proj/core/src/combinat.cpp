#include <algorithm>
#include <set>

#include "georeduce/combinat.hpp"
#include "georeduce/errors.hpp"

namespace georeduce::combinat {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidInput, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::kInvalidInput, "duplicate edge");
    }
    edges_.emplace_back(u, v);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].first].push_back(e);
    adjacency_[edges_[e].second].push_back(e);
  }
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t e : adjacency_[u]) {
    if (edges_[e] == Edge{u, v}) return true;
  }
  return false;
}

std::size_t max_set_size(const SetSystem& s) {
  std::size_t k = 0;
  for (const auto& set : s.sets) k = std::max(k, set.size());
  return k;
}

std::size_t max_frequency(const SetSystem& s) {
  std::vector<std::size_t> count(s.n, 0);
  for (const auto& set : s.sets) {
    for (std::size_t e : set) ++count[e];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

SetSystem make_set_system(std::size_t n,
                          std::vector<std::vector<std::size_t>> sets,
                          std::size_t k, std::size_t freq) {
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (std::size_t e : set) {
      if (e >= n) throw Error(ErrorCode::kInvalidInput, "element out of range");
    }
  }
  SetSystem s{n, std::move(sets), k, freq};
  if (max_set_size(s) > k) {
    throw Error(ErrorCode::kInvalidInput, "a set exceeds the declared size k");
  }
  if (max_frequency(s) > freq) {
    throw Error(ErrorCode::kInvalidInput,
                "an element exceeds the declared frequency");
  }
  return s;
}

std::size_t EdgeColoring::num_colors() const {
  std::set<std::size_t> used(color.begin(), color.end());
  return used.size();
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
  if (c.color.size() != g.edges().size()) return false;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::set<std::size_t> seen;
    for (std::size_t e : g.incident(v)) {
      if (!seen.insert(c.color[e]).second) return false;
    }
  }
  return true;
}

bool is_cover(const SetSystem& s, const std::vector<std::size_t>& chosen) {
  std::vector<bool> covered(s.n, false);
  for (std::size_t i : chosen) {
    if (i >= s.sets.size()) return false;
    for (std::size_t e : s.sets[i]) covered[e] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || g.has_edge(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

SetSystem vc_to_setcover(const Graph& g) {
  if (g.max_degree() > kMaxReductionDegree) {
    throw Error(ErrorCode::kDegreeViolation, "maximum degree exceeds 3");
  }
  std::vector<std::vector<std::size_t>> sets(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) sets[v] = g.incident(v);
  return make_set_system(g.edges().size(), std::move(sets), 3, 2);
}

}  // namespace georeduce::combinat
