#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "georeduce/combinat.hpp"
#include "georeduce/gear.hpp"
#include "georeduce/geom2d.hpp"
#include "georeduce/geom3d.hpp"
#include "georeduce/rational.hpp"

namespace georeduce::reductions {

// ---------------------------------------------------------------------------
// Verification reports

struct Condition {
  std::string id;
  bool passed = false;
  std::string detail;  // witness data for failures, a summary otherwise
};

struct VerificationReport {
  std::vector<Condition> conditions;

  bool passed() const;
  void add(std::string id, bool passed, std::string detail = {});
  const Condition* find(const std::string& id) const;
  std::vector<std::string> failed_ids() const;
};

// Condition ids shared by the verifiers, the report file and the CLI.
namespace condition {
inline constexpr const char* kStructure = "structure";
inline constexpr const char* kUnitCircle = "unit-circle";
inline constexpr const char* kConvexity = "convexity";
inline constexpr const char* kRadiusSchedule = "radius-schedule";
inline constexpr const char* kSimilarSize = "similar-size";
inline constexpr const char* kMembership = "membership";
inline constexpr const char* kIntersections = "<=6-intersections";
inline constexpr const char* kFrequency = "freq";
inline constexpr const char* kOptimum = "optimum";
inline constexpr const char* kColoring = "coloring";
inline constexpr const char* kArcBlocks = "arc-blocks";
inline constexpr const char* kMinAngle = "A";
inline constexpr const char* kDepthAtMostTwo = "B";
inline constexpr const char* kConvexPosition = "C";
inline constexpr const char* kDiameter = "D";
inline constexpr const char* kAngleProfile = "E";
inline constexpr const char* kVerticesArePoints = "F";
inline constexpr const char* kDepth = "depth";
inline constexpr const char* kCocircular = "cocircular";
inline constexpr const char* kCircleIncidence = "circle-incidence";
inline constexpr const char* kDistinctShapes = "distinct-shapes";
inline constexpr const char* kLift = "lift";
inline constexpr const char* kPlaneIncidence = "plane-incidence";
inline constexpr const char* kMomentSites = "moment-sites";
inline constexpr const char* kWitnessMargin = "witness-margin";
inline constexpr const char* kTriangles = "triangles";
inline constexpr const char* kAdjacency = "iff-adjacency";
}  // namespace condition

// [point][shape]
using MembershipMatrix = std::vector<std::vector<bool>>;

// Cover instance over the first `required` points: set j holds the required
// points contained in shape j.
combinat::SetSystem cover_system(const MembershipMatrix& m, std::size_t required,
                                 std::size_t num_shapes);

// ---------------------------------------------------------------------------
// Friendly (gear) set cover

struct FriendlyInstance {
  combinat::SetSystem source;
  std::vector<geom2d::UnitCirclePoint> points;  // element i is point i
  std::vector<geom2d::GearRegion> regions;      // set i is region i
};

// Region i (0-based) gets inner radius 1 - (i + 1) / (10 n^2 m).
Rational friendly_radius(std::size_t index, std::size_t n, std::size_t m);

// Requires sets of size <= 3, frequency <= 4 and nonempty sets
// (invalid-input otherwise). Propagates teeth-overlap; throws
// membership-mismatch if a point lands in a region of a set that does not
// contain it.
FriendlyInstance build_friendly(const combinat::SetSystem& s);
VerificationReport verify_friendly(const FriendlyInstance& inst);
MembershipMatrix geometric_membership(const FriendlyInstance& inst);

// ---------------------------------------------------------------------------
// Fat triangles, circles, planes
//
// Points are laid out on four short arcs of the unit circle centred at 0, 90,
// 180 and 270 degrees, one arc per edge colour. Points 0..|E|-1 are the edge
// points (point e for edge e); the rest are filler vertices that complete the
// triangles of vertices of degree < 3. Filler points are never required to
// be covered.

struct FatTriangleInstance {
  combinat::Graph source;
  combinat::EdgeColoring coloring;
  Rational delta;  // degrees
  Rational alpha;  // arc half-width, degrees
  std::vector<geom2d::UnitCirclePoint> points;
  std::size_t required = 0;
  std::vector<std::size_t> block;            // arc of each point, 0..3
  std::vector<geom2d::Triangle2> triangles;  // triangle v for vertex v
};

inline constexpr std::size_t kArcCount = 4;

// Half-width schedule: alpha = delta / 4.
Rational arc_half_width(const Rational& delta);

// Requires max degree <= 3 (degree-violation) and 0 < delta < 10
// (invalid-input). Every condition is verified before returning;
// condition-violation names the first failing one.
FatTriangleInstance build_fat_triangles(const combinat::Graph& g,
                                        const Rational& delta);
VerificationReport verify_fat_triangles(const FatTriangleInstance& inst);
MembershipMatrix geometric_membership(const FatTriangleInstance& inst);

struct CircleInstance {
  combinat::Graph source;
  Rational delta;
  Rational perturbation_denominator;  // D of the accepted schedule step
  std::vector<geom2d::Point2> points;  // same indexing as the fat layout
  std::size_t required = 0;
  std::vector<geom2d::Triangle2> triangles;  // defining triple of circle v
  std::vector<geom2d::Circle> circles;
};

// Radial perturbation: point j is scaled by 1 + 1 / (D 3^j) for
// D = 10^6, 10^7, ... until no four points are cocircular.
inline constexpr int kPerturbationSteps = 8;
std::vector<geom2d::Point2> perturb_radially(std::span<const geom2d::Point2> base,
                                             const Rational& denominator);

CircleInstance build_circles(const combinat::Graph& g, const Rational& delta);
VerificationReport verify_circles(const CircleInstance& inst);
MembershipMatrix geometric_membership(const CircleInstance& inst);

struct PlaneInstance {
  CircleInstance circles;
  std::vector<geom3d::Point3> points;  // lifted
  std::vector<geom3d::Plane> planes;
};

PlaneInstance build_planes(const CircleInstance& ci);
VerificationReport verify_planes(const PlaneInstance& inst);
MembershipMatrix geometric_membership(const PlaneInstance& inst);

// Expected membership for the graph-sourced layouts: edge point e lies in
// shapes u and v of edge (u, v); a filler lies only in its own shape.
MembershipMatrix source_membership(const combinat::Graph& g,
                                   const std::vector<geom2d::Triangle2>& triangles,
                                   std::size_t num_points);

// ---------------------------------------------------------------------------
// 3D triangle independent set

struct Triangle3DInstance {
  combinat::Graph source;
  std::vector<geom3d::Point3> sites;           // moment_point(v + 1)
  std::vector<geom3d::FacetWitness> witnesses;  // witness e for edge e
  // Witness indices spanning triangle v; empty means the point triangle at
  // site v (isolated vertex).
  std::vector<std::vector<std::size_t>> triangle_witnesses;
};

inline constexpr std::size_t kMaxIndep3dVertices = 25;

std::vector<geom3d::Triangle3> triangles_of(const Triangle3DInstance& inst);
combinat::Graph intersection_graph(const std::vector<geom3d::Triangle3>& tris);

// Requires max degree <= 3 and at most kMaxIndep3dVertices vertices.
// Propagates infeasible-witness; throws adjacency-mismatch if the certified
// intersection graph differs from g.
Triangle3DInstance build_indep3d(const combinat::Graph& g);
VerificationReport verify_indep3d(const Triangle3DInstance& inst);

}  // namespace georeduce::reductions
