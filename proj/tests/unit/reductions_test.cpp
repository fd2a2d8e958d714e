#include <gtest/gtest.h>

#include <algorithm>

#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"
#include "georeduce/reductions.hpp"
#include "oracles.hpp"

namespace georeduce::reductions {
namespace {

using combinat::Edge;
using combinat::Graph;

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
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

MembershipMatrix set_matrix(const combinat::SetSystem& s) {
  MembershipMatrix m(s.n, std::vector<bool>(s.sets.size(), false));
  for (std::size_t j = 0; j < s.sets.size(); ++j)
    for (std::size_t e : s.sets[j]) m[e][j] = true;
  return m;
}

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.conditions)
    if (!c.passed) out += c.id + " (" + c.detail + ") ";
  return out;
}

bool failed(const VerificationReport& r, const char* id) {
  const auto* c = r.find(id);
  return c != nullptr && !c->passed;
}

// --- friendly ---

TEST(Friendly, CompleteGraphOnFour) {
  const auto s = combinat::vc_to_setcover(complete(4));
  const auto inst = build_friendly(s);
  EXPECT_EQ(inst.points.size(), 6u);
  ASSERT_EQ(inst.regions.size(), 4u);
  for (const auto& r : inst.regions) EXPECT_EQ(r.boundary.teeth.size(), 3u);
  const auto report = verify_friendly(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
  EXPECT_EQ(geometric_membership(inst), set_matrix(s));
  EXPECT_EQ(combinat::exact_min_set_cover(cover_system(geometric_membership(inst), 6, 4)).size,
            3u);
}

TEST(Friendly, SingleSet) {
  const auto s = combinat::make_set_system(1, {{0}}, 3, 4);
  const auto inst = build_friendly(s);
  ASSERT_EQ(inst.points.size(), 1u);
  ASSERT_EQ(inst.regions.size(), 1u);
  EXPECT_EQ(inst.regions[0].boundary.teeth.size(), 1u);
  EXPECT_EQ(inst.regions[0].inner_radius, Rational(9, 10));
  EXPECT_TRUE(verify_friendly(inst).passed());
}

TEST(Friendly, RejectsBadSystems) {
  const auto five = combinat::make_set_system(1, {{0}, {0}, {0}, {0}, {0}}, 3, 5);
  EXPECT_EQ(code_of([&] { build_friendly(five); }), ErrorCode::kInvalidInput);
  const auto big = combinat::make_set_system(4, {{0, 1, 2, 3}}, 4, 4);
  EXPECT_EQ(code_of([&] { build_friendly(big); }), ErrorCode::kInvalidInput);
  const auto empty_set = combinat::make_set_system(1, {{0}, {}}, 3, 4);
  EXPECT_EQ(code_of([&] { build_friendly(empty_set); }), ErrorCode::kInvalidInput);
}

TEST(Friendly, EmptySystemIsVacuous) {
  const auto s = combinat::make_set_system(0, {}, 3, 4);
  const auto inst = build_friendly(s);
  EXPECT_TRUE(inst.points.empty());
  EXPECT_TRUE(verify_friendly(inst).passed());
  EXPECT_TRUE(geometric_membership(inst).empty());
}

TEST(Friendly, MovedTipFailsMembership) {
  const auto s = combinat::vc_to_setcover(complete(4));
  auto inst = build_friendly(s);
  auto& tips = inst.regions[0].tooth_tips;
  // Replace the first tip by a point the set does not contain.
  for (std::size_t p = 0; p < inst.points.size(); ++p) {
    if (std::find(tips.begin(), tips.end(), p) == tips.end()) {
      tips[0] = p;
      break;
    }
  }
  const auto report = verify_friendly(inst);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(failed(report, condition::kMembership)) << failures(report);
}

TEST(Friendly, WrongRadiusFailsSchedule) {
  auto inst = build_friendly(combinat::vc_to_setcover(complete(4)));
  std::swap(inst.regions[0].inner_radius, inst.regions[1].inner_radius);
  EXPECT_TRUE(failed(verify_friendly(inst), condition::kRadiusSchedule));
}

TEST(Friendly, RandomSystemsPreserveOptimum) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const std::size_t m = std::max<std::size_t>((n + 2) / 3, 2 + seed % 7);
    const auto s = harness::random_set_system(n, m, seed);
    const auto inst = build_friendly(s);
    const auto report = verify_friendly(inst);
    EXPECT_TRUE(report.passed()) << seed << ": " << failures(report);
    const auto geo = geometric_membership(inst);
    EXPECT_EQ(geo, set_matrix(s));
    EXPECT_EQ(combinat::exact_min_set_cover(cover_system(geo, n, m)).size,
              oracles::min_set_cover(s));
  }
}

// --- fat triangles ---

TEST(FatTriangles, CompleteGraphOnFour) {
  const auto inst = build_fat_triangles(complete(4), 1);
  EXPECT_EQ(inst.points.size(), 6u);
  EXPECT_EQ(inst.required, 6u);
  EXPECT_EQ(inst.triangles.size(), 4u);
  EXPECT_EQ(inst.alpha, Rational(1, 4));
  std::vector<bool> arcs(kArcCount, false);
  for (std::size_t b : inst.block) arcs[b] = true;
  EXPECT_LE(std::count(arcs.begin(), arcs.end(), true), 4);
  const auto report = verify_fat_triangles(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
  const auto m = geometric_membership(inst);
  EXPECT_EQ(combinat::exact_min_set_cover(cover_system(m, inst.required, 4)).size, 3u);
}

TEST(FatTriangles, TriangleGraph) {
  const auto inst = build_fat_triangles(cycle(3), 1);
  EXPECT_EQ(inst.required, 3u);
  EXPECT_EQ(inst.points.size(), 6u);  // 3 edge points plus one filler per vertex
  EXPECT_EQ(inst.triangles.size(), 3u);
  const auto m = geometric_membership(inst);
  EXPECT_EQ(combinat::exact_min_set_cover(cover_system(m, inst.required, 3)).size, 2u);
  EXPECT_EQ(oracles::min_vertex_cover(cycle(3)), 2u);
}

TEST(FatTriangles, SingleEdgeUsesFillers) {
  const auto inst = build_fat_triangles(Graph(2, {{0, 1}}), 1);
  EXPECT_EQ(inst.required, 1u);
  EXPECT_EQ(inst.points.size(), 5u);
  const auto report = verify_fat_triangles(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
  const auto m = geometric_membership(inst);
  EXPECT_EQ(m[0], (std::vector<bool>{true, true}));
  for (std::size_t p = 1; p < 5; ++p) {
    EXPECT_EQ(std::count(m[p].begin(), m[p].end(), true), 1);
  }
}

TEST(FatTriangles, IsolatedVerticesGetFullFillerTriangles) {
  const auto inst = build_fat_triangles(Graph(3, {}), 5);
  EXPECT_EQ(inst.required, 0u);
  EXPECT_EQ(inst.points.size(), 9u);
  EXPECT_TRUE(verify_fat_triangles(inst).passed());
}

TEST(FatTriangles, Errors) {
  EXPECT_EQ(code_of([] { build_fat_triangles(complete(5), 1); }), ErrorCode::kDegreeViolation);
  EXPECT_EQ(code_of([] { build_fat_triangles(complete(4), 0); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { build_fat_triangles(complete(4), 10); }), ErrorCode::kInvalidInput);
}

TEST(FatTriangles, ShrunkDeltaFailsAngleConditions) {
  auto inst = build_fat_triangles(complete(4), 5);
  inst.delta = Rational(1, 100);
  const auto report = verify_fat_triangles(inst);
  EXPECT_TRUE(failed(report, condition::kMinAngle) || failed(report, condition::kAngleProfile))
      << failures(report);
}

TEST(FatTriangles, SwappedColorFails) {
  auto inst = build_fat_triangles(complete(4), 1);
  inst.coloring.color[0] = (inst.coloring.color[0] + 1) % kArcCount;
  const auto report = verify_fat_triangles(inst);
  EXPECT_TRUE(failed(report, condition::kColoring) || failed(report, condition::kArcBlocks))
      << failures(report);
}

TEST(FatTriangles, DuplicatedPointFailsConvexPosition) {
  auto inst = build_fat_triangles(complete(4), 1);
  inst.points[1] = inst.points[0];
  EXPECT_TRUE(failed(verify_fat_triangles(inst), condition::kConvexPosition));
}

TEST(FatTriangles, RandomGraphsSatisfyEveryCondition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = harness::random_degree3_graph(4 + seed % 7, seed);
    for (long delta : {1, 5}) {
      const auto inst = build_fat_triangles(g, delta);
      const auto report = verify_fat_triangles(inst);
      EXPECT_TRUE(report.passed()) << seed << ": " << failures(report);
      const auto m = geometric_membership(inst);
      EXPECT_EQ(m, source_membership(g, inst.triangles, inst.points.size()));
      for (std::size_t p = 0; p < inst.required; ++p) {
        EXPECT_EQ(std::count(m[p].begin(), m[p].end(), true), 2);
      }
      EXPECT_EQ(combinat::exact_min_set_cover(
                    cover_system(m, inst.required, g.num_vertices()))
                    .size,
                oracles::min_vertex_cover(g));
    }
  }
}

// --- circles and planes ---

TEST(Circles, CompleteGraphOnFour) {
  const auto inst = build_circles(complete(4), 1);
  ASSERT_EQ(inst.circles.size(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) EXPECT_NE(inst.circles[a], inst.circles[b]);
  const auto report = verify_circles(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
  const auto m = geometric_membership(inst);
  for (std::size_t p = 0; p < inst.required; ++p) {
    EXPECT_EQ(std::count(m[p].begin(), m[p].end(), true), 2);
  }
  EXPECT_EQ(combinat::exact_min_set_cover(cover_system(m, inst.required, 4)).size, 3u);
  EXPECT_FALSE(geom2d::find_cocircular_quadruple(inst.points).has_value());
}

TEST(Circles, TriangleGraph) {
  const auto inst = build_circles(cycle(3), 1);
  EXPECT_EQ(inst.circles.size(), 3u);
  EXPECT_TRUE(verify_circles(inst).passed());
}

TEST(Circles, PerturbationRemovedFailsCocircular) {
  auto inst = build_circles(complete(4), 1);
  const auto fat = build_fat_triangles(complete(4), 1);
  for (std::size_t i = 0; i < inst.points.size(); ++i) inst.points[i] = fat.points[i].point;
  for (std::size_t v = 0; v < inst.circles.size(); ++v) {
    const auto& t = inst.triangles[v].v;
    inst.circles[v] = geom2d::circle_through(inst.points[t[0]], inst.points[t[1]], inst.points[t[2]]);
  }
  const auto report = verify_circles(inst);
  EXPECT_TRUE(failed(report, condition::kCocircular)) << failures(report);
}

TEST(Circles, PerturbationIsRadialAndSmall) {
  const std::vector<geom2d::Point2> base{{1, 0}, {0, 1}};
  const auto moved = perturb_radially(base, 1000000);
  EXPECT_EQ(moved[0], (geom2d::Point2{Rational(1000001, 1000000), 0}));
  EXPECT_EQ(moved[1], (geom2d::Point2{0, Rational(3000001, 3000000)}));
}

TEST(Planes, CompleteGraphOnFour) {
  const auto ci = build_circles(complete(4), 1);
  const auto inst = build_planes(ci);
  EXPECT_EQ(inst.points.size(), 6u);
  EXPECT_EQ(inst.planes.size(), 4u);
  const auto report = verify_planes(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
  EXPECT_EQ(geometric_membership(inst), geometric_membership(ci));
  EXPECT_EQ(combinat::exact_min_set_cover(cover_system(geometric_membership(inst), 6, 4)).size,
            3u);
}

TEST(Planes, PointsOffTheCircleStayOffThePlane) {
  const auto ci = build_circles(complete(4), 5);
  const auto inst = build_planes(ci);
  for (std::size_t j = 0; j < ci.circles.size(); ++j) {
    for (std::size_t p = 0; p < ci.points.size(); ++p) {
      const int circle_side =
          (geom2d::norm_sq(ci.points[p] - ci.circles[j].center) - ci.circles[j].radius_sq).sign();
      const int plane_side =
          geom3d::plane_value(inst.planes[j], inst.points[p]).sign() * inst.planes[j].c.sign();
      EXPECT_EQ(circle_side, plane_side);
    }
  }
}

TEST(Planes, TamperedPlaneFailsIncidence) {
  auto inst = build_planes(build_circles(complete(4), 1));
  inst.planes[0].d = inst.planes[0].d + Rational(1, 1000);
  EXPECT_TRUE(failed(verify_planes(inst), condition::kPlaneIncidence));
}

TEST(CirclesAndPlanes, RandomGraphsPreserveOptimum) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto g = harness::random_degree3_graph(4 + seed % 7, seed);
    const auto ci = build_circles(g, 1);
    EXPECT_TRUE(verify_circles(ci).passed()) << failures(verify_circles(ci));
    const auto pi = build_planes(ci);
    EXPECT_TRUE(verify_planes(pi).passed()) << failures(verify_planes(pi));
    const std::size_t vc = oracles::min_vertex_cover(g);
    EXPECT_EQ(combinat::exact_min_set_cover(
                  cover_system(geometric_membership(ci), ci.required, g.num_vertices()))
                  .size,
              vc);
    EXPECT_EQ(combinat::exact_min_set_cover(
                  cover_system(geometric_membership(pi), ci.required, g.num_vertices()))
                  .size,
              vc);
  }
}

// --- 3D independent set ---

TEST(Indep3d, FiveCycle) {
  const auto inst = build_indep3d(cycle(5));
  const auto tris = triangles_of(inst);
  ASSERT_EQ(tris.size(), 5u);
  for (const auto& t : tris) EXPECT_EQ(t.kind(), geom3d::Triangle3::Kind::kSegment);
  EXPECT_EQ(sorted_edges(intersection_graph(tris)), sorted_edges(cycle(5)));
  EXPECT_EQ(combinat::exact_max_independent_set(intersection_graph(tris)).size, 2u);
  const auto report = verify_indep3d(inst);
  EXPECT_TRUE(report.passed()) << failures(report);
}

TEST(Indep3d, CompleteGraphOnFour) {
  const auto inst = build_indep3d(complete(4));
  const auto tris = triangles_of(inst);
  for (const auto& t : tris) EXPECT_EQ(t.kind(), geom3d::Triangle3::Kind::kTriangle);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      EXPECT_TRUE(geom3d::tri_tri_intersect(tris[a], tris[b]));
      EXPECT_TRUE(oracles::simplices_intersect(tris[a].vertices(), tris[b].vertices()));
    }
  EXPECT_TRUE(verify_indep3d(inst).passed());
}

TEST(Indep3d, IsolatedVertexIsAPoint) {
  const auto inst = build_indep3d(Graph(3, {{0, 1}}));
  const auto tris = triangles_of(inst);
  EXPECT_EQ(tris[2].kind(), geom3d::Triangle3::Kind::kPoint);
  EXPECT_EQ(tris[2].vertices()[0], geom3d::moment_point(3));
  EXPECT_FALSE(geom3d::tri_tri_intersect(tris[2], tris[0]));
  EXPECT_FALSE(geom3d::tri_tri_intersect(tris[2], tris[1]));
  EXPECT_TRUE(verify_indep3d(inst).passed());
}

TEST(Indep3d, DroppedWitnessFailsAdjacency) {
  auto inst = build_indep3d(cycle(5));
  auto& w = inst.triangle_witnesses[0];
  w.erase(w.begin());
  const auto report = verify_indep3d(inst);
  EXPECT_TRUE(failed(report, condition::kAdjacency)) << failures(report);
}

TEST(Indep3d, Errors) {
  EXPECT_EQ(code_of([] { build_indep3d(complete(5)); }), ErrorCode::kDegreeViolation);
  EXPECT_EQ(code_of([] { build_indep3d(Graph(kMaxIndep3dVertices + 1, {})); }),
            ErrorCode::kBudgetExceeded);
}

TEST(Indep3d, RandomGraphsMatchTheSource) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = harness::random_degree3_graph(3 + seed % 6, seed);
    const auto inst = build_indep3d(g);
    const auto tris = triangles_of(inst);
    // Pairwise check against the LP oracle, independent of tri_tri_intersect.
    for (std::size_t a = 0; a < tris.size(); ++a)
      for (std::size_t b = a + 1; b < tris.size(); ++b)
        EXPECT_EQ(oracles::simplices_intersect(tris[a].vertices(), tris[b].vertices()),
                  g.has_edge(a, b));
    for (const auto& w : inst.witnesses) EXPECT_GT(w.margin, Rational(0));
    EXPECT_EQ(oracles::max_independent_set(intersection_graph(tris)),
              oracles::max_independent_set(g));
  }
}

// --- determinism ---

TEST(Determinism, RebuildsAreIdentical) {
  const auto g = harness::random_degree3_graph(8, 3);
  const auto s = harness::random_set_system(8, 5, 3);
  auto text = [](harness::Instance inst) { return harness::serialize({std::move(inst), 3}); };
  EXPECT_EQ(text(build_friendly(s)), text(build_friendly(s)));
  EXPECT_EQ(text(build_fat_triangles(g, 1)), text(build_fat_triangles(g, 1)));
  EXPECT_EQ(text(build_circles(g, 1)), text(build_circles(g, 1)));
  EXPECT_EQ(text(build_planes(build_circles(g, 1))), text(build_planes(build_circles(g, 1))));
  EXPECT_EQ(text(build_indep3d(g)), text(build_indep3d(g)));
}

}  // namespace
}  // namespace georeduce::reductions
