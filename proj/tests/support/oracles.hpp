#pragma once

// Independent reference implementations used only by the tests. Each one
// takes a different route from the library code it checks: exhaustive
// enumeration, floating-point sampling, or an LP formulation.

#include <cstddef>
#include <vector>

#include "georeduce/combinat.hpp"
#include "georeduce/geom2d.hpp"
#include "georeduce/geom3d.hpp"

namespace georeduce::oracles {

// Exhaustive over all vertex subsets; n <= 20.
std::size_t min_vertex_cover(const combinat::Graph& g);
std::size_t max_independent_set(const combinat::Graph& g);

// Exhaustive over all subfamilies; at most 20 sets. Returns SIZE_MAX when
// the system has no cover.
std::size_t min_set_cover(const combinat::SetSystem& s);

// Scan of every vertex's incident colours.
bool coloring_is_proper(const combinat::Graph& g, const std::vector<std::size_t>& color);

// Gear membership as the union of the inner disk and the closed triangles
// (tip, T-, T+), with the tangency points evaluated in Q(sqrt(1 - r^2)).
bool gear_contains(const Rational& r, const std::vector<geom2d::Point2>& tips,
                   const geom2d::Point2& p);

// Boundary radius of a gear along direction theta (floating point).
double gear_polar_radius(double r, const std::vector<double>& tip_angles, double theta);

// Sign changes of the polar-radius difference over `samples` directions,
// plus the number of shared tips.
std::size_t polar_crossing_count(const Rational& r1, const std::vector<geom2d::Point2>& tips1,
                                 const Rational& r2, const std::vector<geom2d::Point2>& tips2,
                                 std::size_t samples);

// Interior angle at `apex` in degrees (floating point).
double angle_degrees(const geom2d::Point2& apex, const geom2d::Point2& b,
                     const geom2d::Point2& c);

// Closed simplices intersect iff some convex combination of one equals a
// convex combination of the other; decided as an exact LP feasibility test.
bool simplices_intersect(const std::vector<geom3d::Point3>& a,
                         const std::vector<geom3d::Point3>& b);

}  // namespace georeduce::oracles
