#include <benchmark/benchmark.h>

#include <vector>

#include "georeduce/combinat.hpp"
#include "georeduce/gear.hpp"
#include "georeduce/geom2d.hpp"
#include "georeduce/geom3d.hpp"
#include "georeduce/harness.hpp"
#include "georeduce/reductions.hpp"

namespace {

using namespace georeduce;

void BM_InCircle(benchmark::State& state) {
  std::vector<geom2d::Point2> pts;
  for (long t = 1; t <= 4; ++t) pts.push_back(geom2d::unit_circle_point(Rational(t, 7)).point);
  pts[3] = Rational(1000001, 1000000) * pts[3];
  for (auto _ : state) {
    benchmark::DoNotOptimize(geom2d::cocircular_sign(pts[0], pts[1], pts[2], pts[3]));
  }
}
BENCHMARK(BM_InCircle);

void BM_CocircularScan(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 1);
  const auto inst = reductions::build_circles(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geom2d::find_cocircular_quadruple(inst.points));
  }
  state.counters["points"] = static_cast<double>(inst.points.size());
}
BENCHMARK(BM_CocircularScan)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PointInGear(benchmark::State& state) {
  const std::vector<geom2d::Point2> tips{geom2d::unit_circle_point(0).point,
                                         geom2d::unit_circle_point(1).point,
                                         geom2d::unit_circle_point(-1).point};
  const auto gear = geom2d::gear_boundary(Rational(39, 40), tips);
  const geom2d::Point2 p{Rational(97, 100), Rational(3, 100)};
  for (auto _ : state) benchmark::DoNotOptimize(geom2d::point_in_gear(gear, p));
}
BENCHMARK(BM_PointInGear);

void BM_CompareAngle(benchmark::State& state) {
  const geom2d::Point2 a{0, 0}, b{1, 0}, c{Rational(1, 2), Rational(7, 8)};
  for (auto _ : state) benchmark::DoNotOptimize(geom2d::compare_angle(a, b, c, Rational(89, 2)));
}
BENCHMARK(BM_CompareAngle);

void BM_TriTri(benchmark::State& state) {
  const geom3d::Triangle3 a({{0, 0, 0}, {4, 0, 1}, {0, 4, 2}});
  const geom3d::Triangle3 b({{1, 1, -3}, {1, 1, 3}, {3, -1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(geom3d::tri_tri_intersect(a, b));
}
BENCHMARK(BM_TriTri);

void BM_FacetWitness(benchmark::State& state) {
  std::vector<geom3d::Point3> sites;
  for (long t = 1; t <= state.range(0); ++t) sites.push_back(geom3d::moment_point(t));
  for (auto _ : state) benchmark::DoNotOptimize(geom3d::voronoi_facet_witness(0, 1, sites));
}
BENCHMARK(BM_FacetWitness)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EdgeColor(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(combinat::edge_color(g));
}
BENCHMARK(BM_EdgeColor)->Arg(50)->Arg(500)->Arg(5000);

void BM_ExactSetCover(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 5);
  const auto s = combinat::vc_to_setcover(g);
  for (auto _ : state) benchmark::DoNotOptimize(combinat::exact_min_set_cover(s));
}
BENCHMARK(BM_ExactSetCover)->Arg(10)->Arg(20)->Arg(30);

void BM_BuildFriendly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = harness::random_set_system(n, (n + 2) / 3 + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::build_friendly(s));
}
BENCHMARK(BM_BuildFriendly)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BuildFatTriangles(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::build_fat_triangles(g, 1));
}
BENCHMARK(BM_BuildFatTriangles)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BuildCircles(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::build_circles(g, 1));
}
BENCHMARK(BM_BuildCircles)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BuildIndep3d(benchmark::State& state) {
  const auto g = harness::random_degree3_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::build_indep3d(g));
}
BENCHMARK(BM_BuildIndep3d)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
