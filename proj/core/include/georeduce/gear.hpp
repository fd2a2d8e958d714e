#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "georeduce/geom2d.hpp"
#include "georeduce/quadratic.hpp"

namespace georeduce::geom2d {

// Gear region: the convex hull of a disk of radius r < 1 centred at the
// origin together with one to three tips on the unit circle. Each tip is a
// tooth bounded by its two tangent segments to the inner circle; consecutive
// teeth are joined by arcs of the inner circle.
//
// Tangency points are irrational in general. With P a tip and P' the tip
// rotated by +90 degrees they are r^2 P -+ r sqrt(1 - r^2) P', so every
// coordinate is a QuadNumber over the region's radicand 1 - r^2.

inline constexpr std::size_t kMaxTeeth = 3;

struct QuadPoint {
  QuadNumber x;
  QuadNumber y;
};

struct Tooth {
  Point2 tip;
  std::size_t input_index = 0;  // position in the tips list given to the builder
  QuadPoint before;             // tangency point clockwise of the tip
  QuadPoint after;              // tangency point counterclockwise of the tip
};

// Counterclockwise arc of the inner circle.
struct ArcElement {
  QuadPoint from;
  QuadPoint to;
};

// Tangent segment between a tip and one of its tangency points, oriented
// along the counterclockwise boundary traversal.
struct SegmentElement {
  QuadPoint from;
  QuadPoint to;
  std::size_t tooth = 0;
};

using BoundaryElement = std::variant<ArcElement, SegmentElement>;

struct GearBoundary {
  Rational inner_radius;
  std::vector<Tooth> teeth;  // counterclockwise by tip angle
  std::vector<BoundaryElement> elements;
};

struct GearRegion {
  Rational inner_radius;
  std::vector<std::size_t> tooth_tips;  // point indices, same order as teeth
  GearBoundary boundary;
};

// Throws invalid-input on a bad radius, tip count, off-circle or repeated
// tips, and teeth-overlap when two teeth are not separated by a nonempty arc
// (the hull would then have an edge joining two tips).
GearBoundary gear_boundary(const Rational& inner_radius,
                           std::span<const Point2> tips);

GearRegion make_gear_region(const Rational& inner_radius,
                            std::span<const std::size_t> tip_indices,
                            std::span<const Point2> points);

// Closed-region membership, decided with rational arithmetic only.
bool point_in_gear(const GearBoundary& gear, const Point2& p);
inline bool point_in_gear(const GearRegion& region, const Point2& p) {
  return point_in_gear(region.boundary, p);
}

// Number of points where the two boundaries meet: proper crossings, plus one
// per shared tip. Throws invalid-input when the radii coincide and
// tangency-unresolved for any other non-transversal contact.
std::size_t count_boundary_intersections(const GearBoundary& a,
                                         const GearBoundary& b);
inline std::size_t count_boundary_intersections(const GearRegion& a,
                                                const GearRegion& b) {
  return count_boundary_intersections(a.boundary, b.boundary);
}

// Angular extent (radians) of an inner-circle arc; display and tests only.
double arc_extent_radians(const ArcElement& arc);

}  // namespace georeduce::geom2d
