#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "georeduce/rational.hpp"

namespace georeduce::geom2d {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Point2 operator-(const Point2& a, const Point2& b) {
  return {a.x - b.x, a.y - b.y};
}
inline Point2 operator*(const Rational& s, const Point2& p) {
  return {s * p.x, s * p.y};
}
inline Rational dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}
inline Rational cross(const Point2& a, const Point2& b) {
  return a.x * b.y - a.y * b.x;
}
inline Rational norm_sq(const Point2& a) { return dot(a, a); }

// Rational point on the unit circle from the tangent-half-angle parameter t:
// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
struct UnitCirclePoint {
  Rational t;
  Point2 point;
};

UnitCirclePoint unit_circle_point(const Rational& t);

// Parameter for a target angle (degrees, any real): tan(angle / 2) rounded to
// a multiple of 1/kParameterDenominator. Angles whose parameter would exceed
// kParameterClamp in magnitude (the neighbourhood of 180 degrees) clamp to
// +-kParameterClamp.
inline constexpr long kParameterDenominator = 1'000'000;
inline constexpr long kParameterClamp = 1'000'000;
Rational parameter_for_angle(double degrees);

struct Circle {
  Point2 center;
  Rational radius_sq;

  friend bool operator==(const Circle&, const Circle&) = default;
};

inline bool on_circle(const Circle& c, const Point2& p) {
  return norm_sq(p - c.center) == c.radius_sq;
}

// Vertex indices into a point set.
struct Triangle2 {
  std::array<std::size_t, 3> v;

  friend bool operator==(const Triangle2&, const Triangle2&) = default;
};

// +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point2& p, const Point2& q, const Point2& r);

// Sign of the InCircle determinant normalised to counterclockwise (p, q, r):
// +1 when s is strictly inside the circle through p, q, r, -1 strictly
// outside, 0 on it. Throws degenerate-input when p, q, r are collinear.
int cocircular_sign(const Point2& p, const Point2& q, const Point2& r,
                    const Point2& s);

// Some four points on a common circle or line, or nullopt if there are
// none. Exhaustive over all 4-subsets.
std::optional<std::array<std::size_t, 4>> find_cocircular_quadruple(
    std::span<const Point2> points);

// Circumcircle; throws degenerate-input on collinear triples.
Circle circle_through(const Point2& p, const Point2& q, const Point2& r);

// Counterclockwise hull as indices into `points`, starting from the
// lexicographically smallest point. Collinear boundary points and duplicates
// are dropped.
std::vector<std::size_t> convex_hull(std::span<const Point2> points);

// True when every point is a strict vertex of the convex hull of the set.
bool in_strictly_convex_position(std::span<const Point2> points);

// Closed-triangle membership (boundary counts as inside).
bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b,
                       const Point2& c);

// --- angles (degrees are exact rationals) ---

// Sign of (interior angle at `apex` of triangle apex-b-c) - degrees.
// Throws threshold-coincidence if the angle equals `degrees` exactly and
// degenerate-input if the triangle is degenerate.
int compare_angle(const Point2& apex, const Point2& b, const Point2& c,
                  const Rational& degrees);

// lo < angle(apex) < hi, open interval.
bool angle_in_range(const Point2& apex, const Point2& b, const Point2& c,
                    const Rational& lo_deg, const Rational& hi_deg);

// Index (0, 1, 2) of the vertex with the smallest interior angle. Ties go to
// the lowest index.
std::size_t smallest_angle_vertex(const Triangle2& tri,
                                  std::span<const Point2> points);

// lo < (smallest interior angle) < hi.
bool min_angle_in_range(const Triangle2& tri, std::span<const Point2> points,
                        const Rational& lo_deg, const Rational& hi_deg);

// Diameter in (2 - delta, 2], decided on squared lengths. A non-positive
// lower end leaves only the upper bound.
bool diameter_in_range(const Triangle2& tri, std::span<const Point2> points,
                       const Rational& delta);

// Largest squared pairwise distance of the triangle's vertices.
Rational squared_diameter(const Triangle2& tri, std::span<const Point2> points);

}  // namespace georeduce::geom2d
