#include <gtest/gtest.h>

#include "georeduce/combinat.hpp"
#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"
#include "oracles.hpp"

namespace georeduce::combinat {
namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  return Graph(n, e);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidInput;
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_EQ(code_of([] { Graph(2, {{0, 0}}); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { Graph(2, {{0, 1}, {1, 0}}); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { Graph(2, {{0, 2}}); }), ErrorCode::kInvalidInput);
  const Graph g(3, {{2, 0}});
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(VcToSetcover, Examples) {
  const auto k4 = vc_to_setcover(complete(4));
  EXPECT_EQ(k4.n, 6u);
  ASSERT_EQ(k4.sets.size(), 4u);
  for (const auto& s : k4.sets) EXPECT_EQ(s.size(), 3u);
  std::vector<int> freq(6, 0);
  for (const auto& s : k4.sets)
    for (std::size_t e : s) ++freq[e];
  for (int f : freq) EXPECT_EQ(f, 2);

  const auto edge = vc_to_setcover(Graph(2, {{0, 1}}));
  EXPECT_EQ(edge.n, 1u);
  EXPECT_EQ(edge.sets, (std::vector<std::vector<std::size_t>>{{0}, {0}}));

  const auto empty = vc_to_setcover(Graph(3, {}));
  EXPECT_EQ(empty.n, 0u);
  EXPECT_EQ(empty.sets.size(), 3u);
  for (const auto& s : empty.sets) EXPECT_TRUE(s.empty());

  EXPECT_EQ(code_of([] { vc_to_setcover(complete(5)); }), ErrorCode::kDegreeViolation);
}

TEST(EdgeColor, Examples) {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = edge_color(star);
  EXPECT_EQ(c.num_colors(), 3u);
  EXPECT_TRUE(oracles::coloring_is_proper(star, c.color));

  const auto tri = edge_color(cycle(3));
  EXPECT_EQ(tri.num_colors(), 3u);
  EXPECT_TRUE(oracles::coloring_is_proper(cycle(3), tri.color));

  EXPECT_EQ(code_of([] { edge_color(complete(5)); }), ErrorCode::kDegreeViolation);
  EXPECT_TRUE(is_proper(complete(5), vizing_edge_color(complete(5))));
}

TEST(EdgeColor, TriangleNeedsThreeColors) {
  // Brute force: no 2-colouring of C3 is proper.
  const Graph c3 = cycle(3);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    const std::vector<std::size_t> col{mask & 1u, (mask >> 1) & 1u, (mask >> 2) & 1u};
    EXPECT_FALSE(oracles::coloring_is_proper(c3, col));
  }
}

TEST(EdgeColor, RandomGraphsUseAtMostFourColors) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = harness::random_degree3_graph(1 + seed % 40, seed);
    const auto c = edge_color(g);
    EXPECT_LE(c.num_colors(), 4u);
    EXPECT_TRUE(oracles::coloring_is_proper(g, c.color));
    EXPECT_EQ(is_proper(g, c), true);
  }
}

TEST(EdgeColor, VizingBoundOnDenseGraphs) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const Graph g = complete(n);
    const auto c = vizing_edge_color(g);
    EXPECT_LE(c.num_colors(), n);  // Delta + 1 = n
    EXPECT_TRUE(oracles::coloring_is_proper(g, c.color));
  }
}

TEST(SetCover, Examples) {
  const SetSystem s = make_set_system(3, {{0, 1}, {2}, {0, 1, 2}}, 3, 4);
  const auto exact = exact_min_set_cover(s);
  EXPECT_EQ(exact.size, 1u);
  EXPECT_EQ(exact.chosen, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(exact.optimal);
  const auto greedy = greedy_set_cover(s);
  EXPECT_EQ(greedy.chosen, (std::vector<std::size_t>{2}));

  EXPECT_EQ(exact_min_set_cover(vc_to_setcover(complete(4))).size, 3u);
  EXPECT_EQ(oracles::min_vertex_cover(complete(4)), 3u);

  const SetSystem empty = make_set_system(0, {{}, {}}, 3, 4);
  EXPECT_EQ(exact_min_set_cover(empty).size, 0u);
  EXPECT_EQ(greedy_set_cover(empty).size, 0u);

  // Greedy traced by hand: {0,1} gains 2 first, then {1,2} gains 1.
  const SetSystem g2 = make_set_system(3, {{0, 1}, {1, 2}, {0}, {2}}, 3, 4);
  const auto gs = greedy_set_cover(g2);
  EXPECT_EQ(gs.size, 2u);
  EXPECT_EQ(gs.chosen, (std::vector<std::size_t>{0, 1}));
}

TEST(SetCover, Errors) {
  const SetSystem s = make_set_system(3, {{0, 1}}, 3, 4);
  EXPECT_EQ(code_of([&] { exact_min_set_cover(s); }), ErrorCode::kUncoverableElement);
  EXPECT_EQ(code_of([] { make_set_system(2, {{0, 5}}, 3, 4); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { make_set_system(4, {{0, 1, 2, 3}}, 3, 4); }), ErrorCode::kInvalidInput);
  SetSystem big;
  big.n = kMaxCoverElements + 1;
  for (std::size_t e = 0; e < big.n; ++e) big.sets.push_back({e});
  EXPECT_EQ(code_of([&] { exact_min_set_cover(big); }), ErrorCode::kBudgetExceeded);
}

TEST(SetCover, ExactMatchesExhaustiveOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const std::size_t m = std::max<std::size_t>((n + 2) / 3, 1 + seed % 8);
    const auto s = harness::random_set_system(n, std::min(m, 4 * n), seed);
    const auto exact = exact_min_set_cover(s);
    EXPECT_TRUE(is_cover(s, exact.chosen));
    EXPECT_EQ(exact.size, exact.chosen.size());
    EXPECT_EQ(exact.size, oracles::min_set_cover(s));
    const auto greedy = greedy_set_cover(s);
    EXPECT_TRUE(is_cover(s, greedy.chosen));
    EXPECT_GE(greedy.size, exact.size);
  }
}

TEST(SetCover, VertexCoverIdentity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = harness::random_degree3_graph(2 + seed % 12, seed);
    EXPECT_EQ(exact_min_set_cover(vc_to_setcover(g)).size, oracles::min_vertex_cover(g));
  }
}

TEST(IndependentSet, Examples) {
  EXPECT_EQ(exact_max_independent_set(cycle(5)).size, 2u);
  EXPECT_EQ(oracles::max_independent_set(cycle(5)), 2u);
  EXPECT_EQ(exact_max_independent_set(Graph(4, {})).size, 4u);
  EXPECT_EQ(exact_max_independent_set(complete(4)).size, 1u);
  EXPECT_EQ(code_of([] { exact_max_independent_set(Graph(kMaxIndependentSetVertices + 1, {})); }),
            ErrorCode::kBudgetExceeded);
}

TEST(IndependentSet, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = harness::random_degree3_graph(1 + seed % 18, seed);
    const auto mis = exact_max_independent_set(g);
    EXPECT_TRUE(is_independent(g, mis.vertices));
    EXPECT_EQ(mis.size, mis.vertices.size());
    EXPECT_EQ(mis.size, oracles::max_independent_set(g));
    // Complement identity: MIS + min vertex cover = n.
    EXPECT_EQ(mis.size + oracles::min_vertex_cover(g), g.num_vertices());
  }
}

}  // namespace
}  // namespace georeduce::combinat
