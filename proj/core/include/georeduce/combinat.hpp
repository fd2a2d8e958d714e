#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace georeduce::combinat {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph. Edges are stored with first < second.
class Graph {
 public:
  Graph() = default;
  // Throws invalid-input on self-loops, duplicates or out-of-range vertices.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  // Edge indices incident to v, ascending.
  const std::vector<std::size_t>& incident(std::size_t v) const {
    return adjacency_[v];
  }
  bool has_edge(std::size_t u, std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Ground set {0, ..., n-1} and a family of sorted subsets. `k` and `freq`
// are the bounds the system was declared with.
struct SetSystem {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t k = 0;
  std::size_t freq = 0;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

// Tightest bounds: largest set size and largest element frequency.
std::size_t max_set_size(const SetSystem& s);
std::size_t max_frequency(const SetSystem& s);

// Normalises the sets (sorted, deduplicated) and checks indices and the
// declared bounds; throws invalid-input otherwise.
SetSystem make_set_system(std::size_t n, std::vector<std::vector<std::size_t>> sets,
                          std::size_t k, std::size_t freq);

// Colors are 0-based, one per edge in Graph::edges() order.
struct EdgeColoring {
  std::vector<std::size_t> color;

  std::size_t num_colors() const;
};

bool is_proper(const Graph& g, const EdgeColoring& c);

struct CoverSolution {
  std::vector<std::size_t> chosen;  // ascending set indices
  std::size_t size = 0;
  bool optimal = false;
};

bool is_cover(const SetSystem& s, const std::vector<std::size_t>& chosen);

struct IndependentSet {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t size = 0;
};

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

// Ground set = edges, one set per vertex holding its incident edges; k = 3,
// freq = 2. Throws degree-violation when the maximum degree exceeds 3.
SetSystem vc_to_setcover(const Graph& g);

inline constexpr std::size_t kMaxReductionDegree = 3;

// Misra-Gries constructive Vizing colouring with at most Delta + 1 colours.
// Throws degree-violation above kMaxReductionDegree.
EdgeColoring edge_color(const Graph& g);

// Same algorithm without the degree cap.
EdgeColoring vizing_edge_color(const Graph& g);

inline constexpr std::size_t kMaxCoverElements = 40;
inline constexpr std::size_t kMaxCoverSets = 30;
inline constexpr std::size_t kMaxIndependentSetVertices = 30;

// Branch and bound. Throws uncoverable-element if some element is in no set
// and budget-exceeded past the kMaxCover* caps.
CoverSolution exact_min_set_cover(const SetSystem& s);

// Largest marginal gain first, lowest index on ties.
CoverSolution greedy_set_cover(const SetSystem& s);

// Branch on a maximum-degree vertex, split into connected components and
// memoise on the remaining vertex mask. Throws budget-exceeded past
// kMaxIndependentSetVertices.
IndependentSet exact_max_independent_set(const Graph& g);

}  // namespace georeduce::combinat
