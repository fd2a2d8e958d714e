#include <algorithm>
#include <set>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::reductions {
namespace {

using geom2d::Point2;

constexpr std::size_t kTriangleVertices = 3;

std::vector<Point2> coordinates(const FatTriangleInstance& inst) {
  std::vector<Point2> pts;
  pts.reserve(inst.points.size());
  for (const auto& p : inst.points) pts.push_back(p.point);
  return pts;
}

// Open quadrant cones around the axes; nullopt on the diagonals.
std::optional<std::size_t> block_of(const Point2& p) {
  const Rational ax = abs(p.x);
  const Rational ay = abs(p.y);
  if (p.x > ay) return 0;
  if (p.y > ax) return 1;
  if (-p.x > ay) return 2;
  if (-p.y > ax) return 3;
  return std::nullopt;
}

Point2 axis_direction(std::size_t block) {
  switch (block) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Angle between p and the axis of its block is below alpha degrees.
bool within_arc(const Point2& p, std::size_t block, const Rational& alpha) {
  const Point2 axis = axis_direction(block);
  if (geom2d::cross(axis, p).is_zero()) return geom2d::dot(axis, p) > Rational(0);
  return geom2d::compare_angle({0, 0}, axis, p, alpha) < 0;
}

std::string str(std::size_t i) { return std::to_string(i); }

}  // namespace

Rational arc_half_width(const Rational& delta) { return delta / Rational(4); }

MembershipMatrix geometric_membership(const FatTriangleInstance& inst) {
  const auto pts = coordinates(inst);
  MembershipMatrix m(pts.size(), std::vector<bool>(inst.triangles.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < inst.triangles.size(); ++j) {
      const auto& t = inst.triangles[j].v;
      m[i][j] = geom2d::point_in_triangle(pts[i], pts[t[0]], pts[t[1]], pts[t[2]]);
    }
  }
  return m;
}

FatTriangleInstance build_fat_triangles(const combinat::Graph& g,
                                        const Rational& delta) {
  if (g.max_degree() > combinat::kMaxReductionDegree) {
    throw Error(ErrorCode::kDegreeViolation, "maximum degree exceeds 3");
  }
  if (!(Rational(0) < delta && delta < Rational(10))) {
    throw Error(ErrorCode::kInvalidInput, "delta must lie in (0, 10) degrees");
  }

  FatTriangleInstance inst;
  inst.source = g;
  inst.coloring = combinat::edge_color(g);
  inst.delta = delta;
  inst.alpha = arc_half_width(delta);
  inst.required = g.edges().size();

  // Arc contents: edge points by colour, then fillers on the lowest colours
  // missing at their vertex.
  std::vector<std::vector<std::size_t>> arcs(kArcCount);
  std::vector<std::vector<std::size_t>> members(g.num_vertices());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    arcs[inst.coloring.color[e]].push_back(e);
    inst.block.push_back(inst.coloring.color[e]);
  }
  std::size_t next = g.edges().size();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::set<std::size_t> used;
    for (std::size_t e : g.incident(v)) {
      used.insert(inst.coloring.color[e]);
      members[v].push_back(e);
    }
    for (std::size_t c = 0; c < kArcCount && members[v].size() < kTriangleVertices; ++c) {
      if (used.count(c)) continue;
      arcs[c].push_back(next);
      inst.block.push_back(c);
      members[v].push_back(next++);
    }
  }

  inst.points.resize(next);
  const double alpha = inst.alpha.to_double();
  for (std::size_t c = 0; c < kArcCount; ++c) {
    const std::size_t k = arcs[c].size();
    for (std::size_t j = 0; j < k; ++j) {
      const double angle = 90.0 * static_cast<double>(c) - alpha +
                           2.0 * alpha * static_cast<double>(j + 1) /
                               static_cast<double>(k + 1);
      inst.points[arcs[c][j]] =
          geom2d::unit_circle_point(geom2d::parameter_for_angle(angle));
    }
  }

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto& mem = members[v];
    std::sort(mem.begin(), mem.end(), [&](std::size_t a, std::size_t b) {
      return inst.block[a] < inst.block[b];
    });
    inst.triangles.push_back({{mem[0], mem[1], mem[2]}});
  }

  const auto report = verify_fat_triangles(inst);
  if (!report.passed()) {
    const auto failed = report.failed_ids();
    throw Error(ErrorCode::kConditionViolation,
                "condition " + failed.front() + " fails: " +
                    report.find(failed.front())->detail);
  }
  return inst;
}

VerificationReport verify_fat_triangles(const FatTriangleInstance& inst) {
  namespace c = condition;
  VerificationReport report;
  const auto& g = inst.source;
  const std::size_t n = inst.points.size();
  const auto pts = coordinates(inst);

  // (F) structurally: one triangle per vertex over three distinct point
  // indices, and every point is a triangle vertex.
  {
    std::string detail;
    if (inst.triangles.size() != g.num_vertices()) {
      detail = "triangle count differs from the vertex count";
    } else if (inst.required != g.edges().size() || inst.required > n) {
      detail = "required point count differs from the edge count";
    } else if (inst.block.size() != n) {
      detail = "block list length differs from the point count";
    }
    std::vector<bool> used(n, false);
    for (std::size_t t = 0; t < inst.triangles.size() && detail.empty(); ++t) {
      const auto& v = inst.triangles[t].v;
      for (std::size_t p : v) {
        if (p >= n) detail = "triangle " + str(t) + " has a vertex out of range";
      }
      if (detail.empty() && (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])) {
        detail = "triangle " + str(t) + " repeats a vertex index";
      }
      if (detail.empty()) {
        for (std::size_t p : v) used[p] = true;
      }
    }
    for (std::size_t p = 0; p < n && detail.empty(); ++p) {
      if (!used[p]) detail = "point " + str(p) + " is no triangle vertex";
    }
    report.add(c::kVerticesArePoints, detail.empty(), detail);
    if (!detail.empty()) return report;
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < n && detail.empty(); ++i) {
      if (geom2d::norm_sq(pts[i]) != Rational(1)) {
        detail = "point " + str(i) + " is off the unit circle";
      }
    }
    report.add(c::kUnitCircle, detail.empty(), detail);
  }
  {
    std::string detail;
    if (!combinat::is_proper(g, inst.coloring)) {
      detail = "colouring is not proper";
    } else {
      for (std::size_t e = 0; e < inst.coloring.color.size() && detail.empty(); ++e) {
        if (inst.coloring.color[e] >= kArcCount) {
          detail = "edge " + str(e) + " uses colour " + str(inst.coloring.color[e]);
        }
      }
    }
    report.add(c::kColoring, detail.empty(), detail);
  }
  {
    std::string detail;
    try {
      for (std::size_t i = 0; i < n && detail.empty(); ++i) {
        const auto b = block_of(pts[i]);
        if (!b || *b != inst.block[i]) {
          detail = "point " + str(i) + " is not on arc " + str(inst.block[i]);
        } else if (!within_arc(pts[i], *b, inst.alpha)) {
          detail = "point " + str(i) + " is farther than alpha from its arc centre";
        } else if (i < inst.required && i < inst.coloring.color.size() &&
                   inst.coloring.color[i] != *b) {
          detail = "edge point " + str(i) + " is not on the arc of its colour";
        }
      }
      for (std::size_t t = 0; t < inst.triangles.size() && detail.empty(); ++t) {
        std::set<std::size_t> blocks;
        for (std::size_t p : inst.triangles[t].v) blocks.insert(inst.block[p]);
        if (blocks.size() != kTriangleVertices) {
          detail = "triangle " + str(t) + " reuses an arc";
        }
      }
    } catch (const Error& e) {
      detail = e.what();
    }
    report.add(c::kArcBlocks, detail.empty(), detail);
  }

  const Rational d45 = Rational(45);
  const Rational d90 = Rational(90);
  {
    std::string detail;
    for (std::size_t t = 0; t < inst.triangles.size() && detail.empty(); ++t) {
      try {
        if (!geom2d::min_angle_in_range(inst.triangles[t], pts, d45 - inst.delta,
                                        Rational(180))) {
          detail = "triangle " + str(t) + " has an angle at most 45 - delta";
        }
      } catch (const Error& e) {
        detail = "triangle " + str(t) + ": " + e.what();
      }
    }
    report.add(c::kMinAngle, detail.empty(), detail);
  }
  {
    std::string detail;
    for (std::size_t t = 0; t < inst.triangles.size() && detail.empty(); ++t) {
      const auto& v = inst.triangles[t].v;
      try {
        int near45 = 0;
        int near90 = 0;
        for (std::size_t k = 0; k < kTriangleVertices; ++k) {
          const Point2& apex = pts[v[k]];
          const Point2& b = pts[v[(k + 1) % 3]];
          const Point2& cc = pts[v[(k + 2) % 3]];
          if (geom2d::angle_in_range(apex, b, cc, d45 - inst.delta, d45 + inst.delta)) {
            ++near45;
          } else if (geom2d::angle_in_range(apex, b, cc, d90 - inst.delta,
                                            d90 + inst.delta)) {
            ++near90;
          }
        }
        if (near45 != 2 || near90 != 1) {
          detail = "triangle " + str(t) + " has " + std::to_string(near45) +
                   " angles near 45 and " + std::to_string(near90) + " near 90";
        }
      } catch (const Error& e) {
        detail = "triangle " + str(t) + ": " + e.what();
      }
    }
    report.add(c::kAngleProfile, detail.empty(), detail);
  }

  const auto geo = geometric_membership(inst);
  {
    std::string depth_detail;
    std::string exact_detail;
    for (std::size_t i = 0; i < n; ++i) {
      const auto depth = static_cast<std::size_t>(
          std::count(geo[i].begin(), geo[i].end(), true));
      const std::size_t want = i < inst.required ? 2 : 1;
      if (depth > 2 && depth_detail.empty()) {
        depth_detail = "point " + str(i) + " has depth " + str(depth);
      }
      if (depth != want && exact_detail.empty()) {
        exact_detail = "point " + str(i) + " has depth " + str(depth) + ", expected " +
                       str(want);
      }
    }
    report.add(c::kDepthAtMostTwo, depth_detail.empty(), depth_detail);
    report.add(c::kDepth, exact_detail.empty(), exact_detail);
  }
  {
    const bool ok = geom2d::in_strictly_convex_position(pts);
    report.add(c::kConvexPosition, ok,
               ok ? std::string{} : "some point is not a strict hull vertex");
  }
  {
    std::string detail;
    for (std::size_t t = 0; t < inst.triangles.size() && detail.empty(); ++t) {
      if (!geom2d::diameter_in_range(inst.triangles[t], pts, inst.delta)) {
        detail = "triangle " + str(t) + " has squared diameter " +
                 geom2d::squared_diameter(inst.triangles[t], pts).str();
      }
    }
    report.add(c::kDiameter, detail.empty(), detail);
  }
  {
    const auto want = source_membership(g, inst.triangles, n);
    std::string detail;
    for (std::size_t i = 0; i < n && detail.empty(); ++i) {
      for (std::size_t j = 0; j < inst.triangles.size() && detail.empty(); ++j) {
        if (geo[i][j] != want[i][j]) {
          detail = "point " + str(i) + (geo[i][j] ? " in" : " not in") +
                   " triangle " + str(j);
        }
      }
    }
    report.add(c::kMembership, detail.empty(), detail);
  }
  {
    std::ostringstream detail;
    bool ok = false;
    try {
      const auto geometric = combinat::exact_min_set_cover(
          cover_system(geo, inst.required, inst.triangles.size()));
      const auto original = combinat::exact_min_set_cover(combinat::vc_to_setcover(g));
      ok = geometric.size == original.size;
      detail << "geometric " << geometric.size << ", source " << original.size;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kBudgetExceeded) {
        ok = true;
        detail << "skipped: " << e.what();
      } else {
        detail << e.what();
      }
    }
    report.add(c::kOptimum, ok, detail.str());
  }
  return report;
}

}  // namespace georeduce::reductions
