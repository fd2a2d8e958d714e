#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "georeduce/geom2d.hpp"
#include "georeduce/rational.hpp"

namespace georeduce::geom3d {

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3&, const Point3&) = default;
};

inline Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3 operator*(const Rational& s, const Point3& p) {
  return {s * p.x, s * p.y, s * p.z};
}
inline Rational dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational norm_sq(const Point3& a) { return dot(a, a); }

// Sign of det(b - a, c - a, d - a); positive when d is above the plane of a,
// b, c oriented by the right-hand rule.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// {a x + b y + c z = d}, scaled so the first nonzero of (a, b, c) is 1.
struct Plane {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  friend bool operator==(const Plane&, const Plane&) = default;
};

// Throws invalid-input when (a, b, c) is zero.
Plane make_plane(Rational a, Rational b, Rational c, Rational d);

inline Rational plane_value(const Plane& h, const Point3& p) {
  return h.a * p.x + h.b * p.y + h.c * p.z - h.d;
}
inline bool on_plane(const Plane& h, const Point3& p) {
  return plane_value(h, p).is_zero();
}

// Closed simplex with one, two or three distinct vertices.
class Triangle3 {
 public:
  enum class Kind { kPoint, kSegment, kTriangle };

  // Deduplicates vertices; throws degenerate-input if three distinct
  // vertices are collinear, invalid-input on zero or more than three.
  explicit Triangle3(std::vector<Point3> vertices);

  Kind kind() const { return kind_; }
  const std::vector<Point3>& vertices() const { return vertices_; }

 private:
  std::vector<Point3> vertices_;
  Kind kind_;
};

// A point on the bisector of sites i and j with positive clearance from
// every other site's cell: |x - p_k|^2 - |x - p_i|^2 >= margin for k != i, j.
struct FacetWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Point3 point;
  Rational margin;
};

// (x, y) -> (x, y, x^2 + y^2)
Point3 lift(const geom2d::Point2& p);

// Plane containing the lift of circle c: z = 2 cx x + 2 cy y - |c|^2 + r^2.
Plane plane_of_lifted_circle(const geom2d::Circle& c);

// (t, t^2, t^3); throws nonpositive-parameter for t <= 0.
Point3 moment_point(const Rational& t);

// min over k != i, j of |x - p_k|^2 - |x - p_i|^2; has_other is false when
// there is no third site.
struct Clearance {
  bool has_other = false;
  Rational value;
};
Clearance facet_clearance(std::size_t i, std::size_t j,
                          std::span<const Point3> sites, const Point3& x);

// Maximum-margin point on the common facet of the Voronoi cells of sites i
// and j (then lexicographically smallest x, y, z), found by exact linear
// programming. With only two sites the midpoint is returned with a nominal
// margin of 1. Throws infeasible-witness when no positive margin exists and
// invalid-input on duplicate sites or bad indices.
FacetWitness voronoi_facet_witness(std::size_t i, std::size_t j,
                                   std::span<const Point3> sites);

// Closed-set intersection of two simplices of any dimension 0..2.
bool tri_tri_intersect(const Triangle3& a, const Triangle3& b);

}  // namespace georeduce::geom3d
