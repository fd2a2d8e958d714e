#include <algorithm>
#include <iterator>
#include <optional>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::reductions {
namespace {

std::string str(std::size_t i) { return std::to_string(i); }

std::vector<combinat::Edge> sorted_edges(const combinat::Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

std::string edge_difference(const combinat::Graph& got, const combinat::Graph& want) {
  const auto a = sorted_edges(got);
  const auto b = sorted_edges(want);
  std::vector<combinat::Edge> extra;
  std::vector<combinat::Edge> missing;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(missing));
  if (extra.empty() && missing.empty()) return {};
  std::ostringstream out;
  if (!extra.empty()) {
    out << "triangles " << extra[0].first << ", " << extra[0].second
        << " meet without an edge";
  } else {
    out << "triangles " << missing[0].first << ", " << missing[0].second
        << " are disjoint across an edge";
  }
  return out.str();
}

std::string structure_problem(const Triangle3DInstance& inst) {
  const auto& g = inst.source;
  if (inst.sites.size() != g.num_vertices() ||
      inst.triangle_witnesses.size() != g.num_vertices()) {
    return "site or triangle count differs from the vertex count";
  }
  if (inst.witnesses.size() != g.edges().size()) {
    return "witness count differs from the edge count";
  }
  for (std::size_t e = 0; e < inst.witnesses.size(); ++e) {
    const auto& w = inst.witnesses[e];
    const auto [u, v] = g.edges()[e];
    if (!((w.i == u && w.j == v) || (w.i == v && w.j == u))) {
      return "witness " + str(e) + " does not belong to edge " + str(e);
    }
  }
  for (std::size_t v = 0; v < inst.triangle_witnesses.size(); ++v) {
    const auto& ws = inst.triangle_witnesses[v];
    if (ws.size() > 3) return "triangle " + str(v) + " has more than three witnesses";
    for (std::size_t w : ws) {
      if (w >= inst.witnesses.size()) {
        return "triangle " + str(v) + " names a missing witness";
      }
    }
  }
  return {};
}

}  // namespace

std::vector<geom3d::Triangle3> triangles_of(const Triangle3DInstance& inst) {
  std::vector<geom3d::Triangle3> out;
  out.reserve(inst.triangle_witnesses.size());
  for (std::size_t v = 0; v < inst.triangle_witnesses.size(); ++v) {
    std::vector<geom3d::Point3> vertices;
    for (std::size_t w : inst.triangle_witnesses[v]) {
      vertices.push_back(inst.witnesses.at(w).point);
    }
    if (vertices.empty()) vertices.push_back(inst.sites.at(v));
    out.emplace_back(std::move(vertices));
  }
  return out;
}

combinat::Graph intersection_graph(const std::vector<geom3d::Triangle3>& tris) {
  std::vector<combinat::Edge> edges;
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      if (geom3d::tri_tri_intersect(tris[a], tris[b])) edges.emplace_back(a, b);
    }
  }
  return combinat::Graph(tris.size(), std::move(edges));
}

Triangle3DInstance build_indep3d(const combinat::Graph& g) {
  if (g.max_degree() > combinat::kMaxReductionDegree) {
    throw Error(ErrorCode::kDegreeViolation, "maximum degree exceeds 3");
  }
  if (g.num_vertices() > kMaxIndep3dVertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "at most " + str(kMaxIndep3dVertices) + " vertices");
  }
  Triangle3DInstance inst;
  inst.source = g;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    inst.sites.push_back(geom3d::moment_point(Rational(v + 1)));
  }
  for (const auto& [u, v] : g.edges()) {
    inst.witnesses.push_back(geom3d::voronoi_facet_witness(u, v, inst.sites));
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    inst.triangle_witnesses.push_back(g.incident(v));
  }
  const auto diff = edge_difference(intersection_graph(triangles_of(inst)), g);
  if (!diff.empty()) throw Error(ErrorCode::kAdjacencyMismatch, diff);
  return inst;
}

VerificationReport verify_indep3d(const Triangle3DInstance& inst) {
  namespace c = condition;
  VerificationReport report;
  const auto& g = inst.source;
  {
    const auto problem = structure_problem(inst);
    report.add(c::kStructure, problem.empty(), problem);
    if (!problem.empty()) return report;
  }
  {
    std::string detail;
    for (std::size_t v = 0; v < inst.sites.size() && detail.empty(); ++v) {
      const auto& p = inst.sites[v];
      if (!(p.x > Rational(0)) || p.y != p.x * p.x || p.z != p.x * p.y) {
        detail = "site " + str(v) + " is off the positive moment curve";
      } else if (v > 0 && !(inst.sites[v - 1].x < p.x)) {
        detail = "site " + str(v) + " does not follow site " + str(v - 1);
      }
    }
    report.add(c::kMomentSites, detail.empty(), detail);
  }
  {
    std::string detail;
    Rational smallest;
    bool any = false;
    for (std::size_t e = 0; e < inst.witnesses.size() && detail.empty(); ++e) {
      const auto& w = inst.witnesses[e];
      const auto& pi = inst.sites[w.i];
      const auto& pj = inst.sites[w.j];
      if (geom3d::norm_sq(w.point - pi) != geom3d::norm_sq(w.point - pj)) {
        detail = "witness " + str(e) + " is off the bisector";
        break;
      }
      const auto clearance = geom3d::facet_clearance(w.i, w.j, inst.sites, w.point);
      if (!clearance.has_other) continue;
      if (!(clearance.value > Rational(0))) {
        detail = "witness " + str(e) + " has clearance " + clearance.value.str();
      } else if (!(w.margin > Rational(0)) || clearance.value < w.margin) {
        detail = "witness " + str(e) + " overstates its margin";
      }
      if (!any || clearance.value < smallest) smallest = clearance.value;
      any = true;
    }
    report.add(c::kWitnessMargin, detail.empty(),
               detail.empty() && any ? "min " + smallest.str() : detail);
  }
  {
    std::string detail;
    for (std::size_t v = 0; v < g.num_vertices() && detail.empty(); ++v) {
      auto got = inst.triangle_witnesses[v];
      std::sort(got.begin(), got.end());
      if (got != g.incident(v)) {
        detail = "triangle " + str(v) + " is not spanned by the witnesses of its edges";
      }
    }
    report.add(c::kTriangles, detail.empty(), detail);
  }

  std::optional<combinat::Graph> geometric;
  {
    std::string detail;
    try {
      geometric = intersection_graph(triangles_of(inst));
      detail = edge_difference(*geometric, g);
    } catch (const Error& e) {
      detail = e.what();
    }
    report.add(c::kAdjacency, detail.empty(), detail);
  }
  {
    std::ostringstream detail;
    bool ok = false;
    if (geometric) {
      try {
        const auto a = combinat::exact_max_independent_set(*geometric);
        const auto b = combinat::exact_max_independent_set(g);
        ok = a.size == b.size;
        detail << "geometric " << a.size << ", source " << b.size;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kBudgetExceeded) {
          ok = true;
          detail << "skipped: " << e.what();
        } else {
          detail << e.what();
        }
      }
    } else {
      detail << "not evaluated: triangles failed to build";
    }
    report.add(c::kOptimum, ok, detail.str());
  }
  return report;
}

}  // namespace georeduce::reductions
