#include <algorithm>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::reductions {
namespace {

using geom2d::Point2;

std::string str(std::size_t i) { return std::to_string(i); }

Rational power_of(long base, int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i) r = r * Rational(base);
  return r;
}

std::string compare_membership(const MembershipMatrix& got,
                               const MembershipMatrix& want,
                               const char* shape) {
  for (std::size_t i = 0; i < got.size() && i < want.size(); ++i) {
    for (std::size_t j = 0; j < got[i].size() && j < want[i].size(); ++j) {
      if (got[i][j] != want[i][j]) {
        return "point " + str(i) + (got[i][j] ? " on" : " not on") + " " + shape +
               " " + str(j);
      }
    }
  }
  if (got.size() != want.size()) return "point count mismatch";
  return {};
}

// Optimum check shared by circles and planes: geometric cover vs vertex
// cover of the source.
Condition optimum_condition(const MembershipMatrix& geo, std::size_t required,
                            std::size_t shapes, const combinat::Graph& g) {
  std::ostringstream detail;
  bool ok = false;
  try {
    const auto geometric =
        combinat::exact_min_set_cover(cover_system(geo, required, shapes));
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
  return {condition::kOptimum, ok, detail.str()};
}

std::string structure_problem(const CircleInstance& inst) {
  const std::size_t n = inst.points.size();
  if (inst.triangles.size() != inst.source.num_vertices() ||
      inst.circles.size() != inst.triangles.size()) {
    return "circle count differs from the vertex count";
  }
  if (inst.required != inst.source.edges().size() || inst.required > n) {
    return "required point count differs from the edge count";
  }
  for (std::size_t t = 0; t < inst.triangles.size(); ++t) {
    for (std::size_t p : inst.triangles[t].v) {
      if (p >= n) return "triangle " + str(t) + " has a vertex out of range";
    }
  }
  return {};
}

void throw_first_failure(const VerificationReport& report) {
  if (report.passed()) return;
  const auto failed = report.failed_ids();
  throw Error(ErrorCode::kConditionViolation,
              "condition " + failed.front() + " fails: " +
                  report.find(failed.front())->detail);
}

}  // namespace

std::vector<Point2> perturb_radially(std::span<const Point2> base,
                                     const Rational& denominator) {
  std::vector<Point2> out;
  out.reserve(base.size());
  Rational step = denominator;
  for (const auto& p : base) {
    out.push_back((Rational(1) + Rational(1) / step) * p);
    step = step * Rational(3);
  }
  return out;
}

MembershipMatrix geometric_membership(const CircleInstance& inst) {
  MembershipMatrix m(inst.points.size(),
                     std::vector<bool>(inst.circles.size(), false));
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (std::size_t j = 0; j < inst.circles.size(); ++j) {
      m[i][j] = geom2d::on_circle(inst.circles[j], inst.points[i]);
    }
  }
  return m;
}

CircleInstance build_circles(const combinat::Graph& g, const Rational& delta) {
  const FatTriangleInstance fat = build_fat_triangles(g, delta);
  std::vector<Point2> base;
  for (const auto& p : fat.points) base.push_back(p.point);

  CircleInstance inst;
  inst.source = g;
  inst.delta = delta;
  inst.required = fat.required;
  inst.triangles = fat.triangles;
  bool found = false;
  for (int step = 0; step < kPerturbationSteps && !found; ++step) {
    const Rational d = power_of(10, 6 + step);
    auto pts = perturb_radially(base, d);
    if (!geom2d::find_cocircular_quadruple(pts)) {
      inst.points = std::move(pts);
      inst.perturbation_denominator = d;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kPerturbationExhausted,
                "every perturbation in the schedule leaves four cocircular points");
  }
  for (const auto& t : inst.triangles) {
    inst.circles.push_back(geom2d::circle_through(
        inst.points[t.v[0]], inst.points[t.v[1]], inst.points[t.v[2]]));
  }
  throw_first_failure(verify_circles(inst));
  return inst;
}

VerificationReport verify_circles(const CircleInstance& inst) {
  namespace c = condition;
  VerificationReport report;
  {
    const auto problem = structure_problem(inst);
    report.add(c::kStructure, problem.empty(), problem);
    if (!problem.empty()) return report;
  }
  {
    const auto quad = geom2d::find_cocircular_quadruple(inst.points);
    std::string detail;
    if (quad) {
      detail = "points " + str((*quad)[0]) + ", " + str((*quad)[1]) + ", " +
               str((*quad)[2]) + ", " + str((*quad)[3]) + " are cocircular";
    }
    report.add(c::kCocircular, !quad, detail);
  }
  {
    std::string detail;
    for (std::size_t j = 0; j < inst.circles.size() && detail.empty(); ++j) {
      const auto& v = inst.triangles[j].v;
      if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
        detail = "circle " + str(j) + " has a repeated defining point";
      }
      for (std::size_t p : v) {
        if (detail.empty() && !geom2d::on_circle(inst.circles[j], inst.points[p])) {
          detail = "circle " + str(j) + " misses defining point " + str(p);
        }
      }
    }
    report.add(c::kCircleIncidence, detail.empty(), detail);
  }
  {
    std::string detail;
    for (std::size_t a = 0; a < inst.circles.size() && detail.empty(); ++a) {
      for (std::size_t b = a + 1; b < inst.circles.size() && detail.empty(); ++b) {
        if (inst.circles[a] == inst.circles[b]) {
          detail = "circles " + str(a) + " and " + str(b) + " coincide";
        }
      }
    }
    report.add(c::kDistinctShapes, detail.empty(), detail);
  }
  const auto geo = geometric_membership(inst);
  {
    const auto want = source_membership(inst.source, inst.triangles, inst.points.size());
    const auto detail = compare_membership(geo, want, "circle");
    report.add(c::kMembership, detail.empty(), detail);
  }
  report.conditions.push_back(
      optimum_condition(geo, inst.required, inst.circles.size(), inst.source));
  return report;
}

PlaneInstance build_planes(const CircleInstance& ci) {
  PlaneInstance inst;
  inst.circles = ci;
  for (const auto& p : ci.points) inst.points.push_back(geom3d::lift(p));
  for (const auto& circle : ci.circles) {
    inst.planes.push_back(geom3d::plane_of_lifted_circle(circle));
  }
  throw_first_failure(verify_planes(inst));
  return inst;
}

MembershipMatrix geometric_membership(const PlaneInstance& inst) {
  MembershipMatrix m(inst.points.size(), std::vector<bool>(inst.planes.size(), false));
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (std::size_t j = 0; j < inst.planes.size(); ++j) {
      m[i][j] = geom3d::on_plane(inst.planes[j], inst.points[i]);
    }
  }
  return m;
}

VerificationReport verify_planes(const PlaneInstance& inst) {
  namespace c = condition;
  VerificationReport report;
  const CircleInstance& ci = inst.circles;
  {
    auto problem = structure_problem(ci);
    if (problem.empty() && (inst.points.size() != ci.points.size() ||
                            inst.planes.size() != ci.circles.size())) {
      problem = "lifted sizes differ from the circle instance";
    }
    report.add(c::kStructure, problem.empty(), problem);
    if (!problem.empty()) return report;
  }
  {
    std::string detail;
    for (std::size_t i = 0; i < inst.points.size() && detail.empty(); ++i) {
      if (inst.points[i] != geom3d::lift(ci.points[i])) {
        detail = "point " + str(i) + " is not the lift of its planar point";
      }
    }
    report.add(c::kLift, detail.empty(), detail);
  }
  // A point lies on circle j exactly when its lift lies on plane j.
  const auto on_circles = geometric_membership(ci);
  const auto geo = geometric_membership(inst);
  {
    std::string detail;
    for (std::size_t j = 0; j < inst.planes.size() && detail.empty(); ++j) {
      if (inst.planes[j] != geom3d::plane_of_lifted_circle(ci.circles[j])) {
        detail = "plane " + str(j) + " is not the lift of circle " + str(j);
      }
    }
    if (detail.empty()) {
      const auto diff = compare_membership(geo, on_circles, "plane");
      if (!diff.empty()) detail = "incidence differs from the circle: " + diff;
    }
    report.add(c::kPlaneIncidence, detail.empty(), detail);
  }
  {
    const auto want = source_membership(ci.source, ci.triangles, ci.points.size());
    const auto detail = compare_membership(geo, want, "plane");
    report.add(c::kMembership, detail.empty(), detail);
  }
  report.conditions.push_back(
      optimum_condition(geo, ci.required, inst.planes.size(), ci.source));
  return report;
}

}  // namespace georeduce::reductions
