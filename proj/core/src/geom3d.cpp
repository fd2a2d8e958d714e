#include "georeduce/geom3d.hpp"

#include <algorithm>

#include "georeduce/errors.hpp"
#include "georeduce/linear_program.hpp"

namespace georeduce::geom3d {
namespace {

Rational det3(const Point3& a, const Point3& b, const Point3& c,
              const Point3& d) {
  return dot(cross(b - a, c - a), d - a);
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  return cross(b - a, c - a) == Point3{};
}

bool point_on_segment(const Point3& p, const Point3& a, const Point3& b) {
  return collinear(a, b, p) && dot(p - a, p - b).sign() <= 0;
}

// p in the closed triangle abc (non-degenerate).
bool point_in_triangle(const Point3& p, const Point3& a, const Point3& b,
                       const Point3& c) {
  if (det3(a, b, c, p).sign() != 0) return false;
  const Point3 n = cross(b - a, c - a);
  return dot(cross(b - a, p - a), n).sign() >= 0 &&
         dot(cross(c - b, p - b), n).sign() >= 0 &&
         dot(cross(a - c, p - c), n).sign() >= 0;
}

bool segments_intersect(const Point3& a, const Point3& b, const Point3& c,
                        const Point3& d) {
  if (det3(a, b, c, d).sign() != 0) return false;
  const Point3 n = cross(b - a, d - c);
  if (n == Point3{}) {
    // Parallel: only a collinear overlap can meet.
    if (!collinear(a, b, c)) return false;
    return point_on_segment(c, a, b) || point_on_segment(d, a, b) ||
           point_on_segment(a, c, d) || point_on_segment(b, c, d);
  }
  // In-plane orientation relative to the common normal.
  const auto o = [&](const Point3& p, const Point3& q, const Point3& r) {
    return dot(cross(q - p, r - p), n).sign();
  };
  const int o1 = o(a, b, c);
  const int o2 = o(a, b, d);
  const int o3 = o(c, d, a);
  const int o4 = o(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && point_on_segment(c, a, b)) ||
         (o2 == 0 && point_on_segment(d, a, b)) ||
         (o3 == 0 && point_on_segment(a, c, d)) ||
         (o4 == 0 && point_on_segment(b, c, d));
}

bool segment_triangle(const Point3& a, const Point3& b, const Point3& p,
                      const Point3& q, const Point3& r) {
  const Rational sa = det3(p, q, r, a);
  const Rational sb = det3(p, q, r, b);
  if (sa.sign() * sb.sign() > 0) return false;
  if (sa.is_zero() && sb.is_zero()) {
    return point_in_triangle(a, p, q, r) || point_in_triangle(b, p, q, r) ||
           segments_intersect(a, b, p, q) || segments_intersect(a, b, q, r) ||
           segments_intersect(a, b, r, p);
  }
  // The segment crosses (or touches) the plane at a single point.
  const Rational t = sa / (sa - sb);
  const Point3 x = a + t * (b - a);
  return point_in_triangle(x, p, q, r);
}

bool point_in_simplex(const Point3& p, const Triangle3& s) {
  const auto& v = s.vertices();
  switch (s.kind()) {
    case Triangle3::Kind::kPoint: return p == v[0];
    case Triangle3::Kind::kSegment: return point_on_segment(p, v[0], v[1]);
    case Triangle3::Kind::kTriangle:
      return point_in_triangle(p, v[0], v[1], v[2]);
  }
  return false;
}

bool segment_simplex(const Point3& a, const Point3& b, const Triangle3& s) {
  const auto& v = s.vertices();
  switch (s.kind()) {
    case Triangle3::Kind::kPoint: return point_on_segment(v[0], a, b);
    case Triangle3::Kind::kSegment: return segments_intersect(a, b, v[0], v[1]);
    case Triangle3::Kind::kTriangle:
      return segment_triangle(a, b, v[0], v[1], v[2]);
  }
  return false;
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c,
             const Point3& d) {
  return det3(a, b, c, d).sign();
}

Plane make_plane(Rational a, Rational b, Rational c, Rational d) {
  Rational lead = !a.is_zero() ? a : !b.is_zero() ? b : c;
  if (lead.is_zero()) {
    throw Error(ErrorCode::kInvalidInput, "plane normal is zero");
  }
  return {a / lead, b / lead, c / lead, d / lead};
}

Triangle3::Triangle3(std::vector<Point3> vertices) {
  std::vector<Point3> unique;
  for (auto& v : vertices) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) {
      unique.push_back(std::move(v));
    }
  }
  if (unique.empty() || unique.size() > 3) {
    throw Error(ErrorCode::kInvalidInput, "simplex needs one to three vertices");
  }
  if (unique.size() == 3 && collinear(unique[0], unique[1], unique[2])) {
    throw Error(ErrorCode::kDegenerateInput, "collinear triangle vertices");
  }
  kind_ = unique.size() == 1   ? Kind::kPoint
          : unique.size() == 2 ? Kind::kSegment
                               : Kind::kTriangle;
  vertices_ = std::move(unique);
}

Point3 lift(const geom2d::Point2& p) {
  return {p.x, p.y, geom2d::norm_sq(p)};
}

Plane plane_of_lifted_circle(const geom2d::Circle& c) {
  // |p - c|^2 = r^2 with z = |p|^2:  -2 c.x x - 2 c.y y + z = r^2 - |c|^2
  return make_plane(Rational(-2) * c.center.x, Rational(-2) * c.center.y,
                    Rational(1), c.radius_sq - geom2d::norm_sq(c.center));
}

Point3 moment_point(const Rational& t) {
  if (t.sign() <= 0) {
    throw Error(ErrorCode::kNonpositiveParameter,
                "moment curve parameter must be positive");
  }
  const Rational t2 = t * t;
  return {t, t2, t2 * t};
}

Clearance facet_clearance(std::size_t i, std::size_t j,
                          std::span<const Point3> sites, const Point3& x) {
  Clearance out;
  const Rational di = norm_sq(x - sites[i]);
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (k == i || k == j) continue;
    const Rational v = norm_sq(x - sites[k]) - di;
    if (!out.has_other || v < out.value) out.value = v;
    out.has_other = true;
  }
  return out;
}

namespace {

// Variables: u = x + bound (three, in [0, 2 bound]), mu = m_plus - m_minus.
LinearProgram witness_program(std::size_t i, std::size_t j,
                              std::span<const Point3> sites,
                              const Rational& bound) {
  LinearProgram lp(5);
  const Point3& pi = sites[i];
  const Point3& pj = sites[j];
  const auto coords = [](const Point3& p) {
    return std::vector<Rational>{p.x, p.y, p.z};
  };
  const auto sum = [](const Point3& p) { return p.x + p.y + p.z; };

  // Bisector: 2 (pj - pi) . x = |pj|^2 - |pi|^2
  {
    const Point3 n = Rational(2) * (pj - pi);
    auto row = coords(n);
    row.push_back(0);
    row.push_back(0);
    lp.add_constraint(std::move(row), LinearProgram::Relation::kEqual,
                      norm_sq(pj) - norm_sq(pi) + bound * sum(n));
  }
  // Clearance from every other site: 2 (pi - pk) . x + |pk|^2 - |pi|^2 >= mu
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (k == i || k == j) continue;
    const Point3 n = Rational(2) * (pi - sites[k]);
    auto row = coords(n);
    row.push_back(-1);
    row.push_back(1);
    lp.add_constraint(std::move(row), LinearProgram::Relation::kGreaterEqual,
                      norm_sq(pi) - norm_sq(sites[k]) + bound * sum(n));
  }
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<Rational> row(5, Rational(0));
    row[c] = 1;
    lp.add_constraint(std::move(row), LinearProgram::Relation::kLessEqual,
                      Rational(2) * bound);
  }
  return lp;
}

}  // namespace

FacetWitness voronoi_facet_witness(std::size_t i, std::size_t j,
                                   std::span<const Point3> sites) {
  if (i == j || i >= sites.size() || j >= sites.size()) {
    throw Error(ErrorCode::kInvalidInput, "bad site indices for witness");
  }
  for (std::size_t a = 0; a < sites.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (sites[a] == sites[b]) {
        throw Error(ErrorCode::kInvalidInput, "duplicate Voronoi sites");
      }
    }
  }
  if (sites.size() == 2) {
    return {i, j, Rational(1, 2) * (sites[i] + sites[j]), Rational(1)};
  }

  Rational extent(1);
  for (const Point3& p : sites) {
    extent = std::max({extent, abs(p.x), abs(p.y), abs(p.z)});
  }
  Rational bound = Rational(2) * extent;
  for (int attempt = 0; attempt < 4; ++attempt, bound *= Rational(8)) {
    LinearProgram lp = witness_program(i, j, sites, bound);
    lp.set_objective({0, 0, 0, 1, -1});
    const auto best = lp.maximize();
    if (best.status != LinearProgram::Status::kOptimal ||
        best.objective.sign() <= 0) {
      continue;
    }
    // Fix the margin, then take the lexicographically smallest point.
    lp.add_constraint({0, 0, 0, 1, -1}, LinearProgram::Relation::kEqual,
                      best.objective);
    std::vector<Rational> u(3);
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<Rational> obj(5, Rational(0));
      obj[c] = -1;
      lp.set_objective(obj);
      const auto step = lp.maximize();
      u[c] = step.x[c];
      std::vector<Rational> fix(5, Rational(0));
      fix[c] = 1;
      lp.add_constraint(std::move(fix), LinearProgram::Relation::kEqual, u[c]);
    }
    const Point3 x{u[0] - bound, u[1] - bound, u[2] - bound};
    const Clearance cl = facet_clearance(i, j, sites, x);
    return {i, j, x, cl.value};
  }
  throw Error(ErrorCode::kInfeasibleWitness,
              "no positive-margin point on the facet of sites " +
                  std::to_string(i) + " and " + std::to_string(j));
}

bool tri_tri_intersect(const Triangle3& a, const Triangle3& b) {
  // Order so that a has no more vertices than b.
  if (a.vertices().size() > b.vertices().size()) return tri_tri_intersect(b, a);
  const auto& va = a.vertices();
  switch (a.kind()) {
    case Triangle3::Kind::kPoint: return point_in_simplex(va[0], b);
    case Triangle3::Kind::kSegment: return segment_simplex(va[0], va[1], b);
    case Triangle3::Kind::kTriangle: break;
  }
  // Two proper triangles meet iff an edge of one meets the other: the
  // intersection is convex and its extreme points lie on edges.
  const auto& vb = b.vertices();
  for (std::size_t e = 0; e < 3; ++e) {
    if (segment_triangle(va[e], va[(e + 1) % 3], vb[0], vb[1], vb[2])) return true;
    if (segment_triangle(vb[e], vb[(e + 1) % 3], va[0], va[1], va[2])) return true;
  }
  return false;
}

}  // namespace georeduce::geom3d
