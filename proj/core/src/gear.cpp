#include "georeduce/gear.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "georeduce/errors.hpp"

namespace georeduce::geom2d {
namespace {

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point2& p) {
  return (p.y.sign() < 0 || (p.y.is_zero() && p.x.sign() < 0)) ? 1 : 0;
}

bool angle_less(const Point2& a, const Point2& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

QuadPoint tangency(const Point2& tip, const Rational& r, const Rational& d,
                   int side) {
  const Rational r2 = r * r;
  const Rational s = Rational(side) * r;
  // r^2 P + side * r sqrt(d) (-P.y, P.x)
  return {QuadNumber(r2 * tip.x, -s * tip.y, d),
          QuadNumber(r2 * tip.y, s * tip.x, d)};
}

// --- biquadratic plumbing for the boundary intersection count ---

struct BiPoint {
  BiquadNumber x;
  BiquadNumber y;

  friend BiPoint operator-(const BiPoint& a, const BiPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
};

// Coordinates from the inner field Q(sqrt(d_inner)).
BiPoint embed_inner(const QuadPoint& p) {
  return {BiquadNumber(p.x), BiquadNumber(p.y)};
}

// Coordinates from the outer field Q(sqrt(d_outer)); rational parts map to
// the inner field trivially.
BiPoint embed_outer(const QuadPoint& p) {
  const auto lift = [](const QuadNumber& q) {
    return BiquadNumber(QuadNumber(q.rational_part()),
                        QuadNumber(q.root_coefficient()), q.radicand());
  };
  return {lift(p.x), lift(p.y)};
}

BiPoint embed(const Point2& p) {
  return {BiquadNumber(QuadNumber(p.x)), BiquadNumber(QuadNumber(p.y))};
}

int orient(const BiPoint& a, const BiPoint& b, const BiPoint& c) {
  const BiPoint u = b - a;
  const BiPoint v = c - a;
  return (u.x * v.y - u.y * v.x).sign();
}

int dot_sign(const BiPoint& u, const BiPoint& v) {
  return (u.x * v.x + u.y * v.y).sign();
}

// e on the closed segment [a, b].
bool on_segment(const BiPoint& a, const BiPoint& b, const BiPoint& e) {
  return orient(a, b, e) == 0 && dot_sign(e - a, e - b) <= 0;
}

struct Segment {
  BiPoint tip;
  BiPoint tangency;
};

// Tangent segments of `g` as (tip, tangency point) pairs.
template <typename Embed>
std::vector<Segment> segments_of(const GearBoundary& g, Embed embed_tangency) {
  std::vector<Segment> out;
  for (const Tooth& t : g.teeth) {
    out.push_back({embed(t.tip), embed_tangency(t.before)});
    out.push_back({embed(t.tip), embed_tangency(t.after)});
  }
  return out;
}

// Segment/segment contribution. Segments are open at both ends: shared tips
// are counted separately and tangency endpoints lie on the owner's arc, where
// the arc test picks them up.
std::size_t segment_crossing(const Segment& s, const Segment& t) {
  if ((s.tip.x - t.tip.x).sign() == 0 && (s.tip.y - t.tip.y).sign() == 0) {
    // Same tip: only a collinear overlap would add contact beyond the tip.
    if (orient(s.tip, s.tangency, t.tangency) == 0 &&
        dot_sign(s.tangency - s.tip, t.tangency - s.tip) > 0) {
      throw Error(ErrorCode::kTangencyUnresolved,
                  "tangent segments of a shared tip overlap");
    }
    return 0;
  }
  const int o1 = orient(s.tip, s.tangency, t.tip);
  const int o2 = orient(s.tip, s.tangency, t.tangency);
  const int o3 = orient(t.tip, t.tangency, s.tip);
  const int o4 = orient(t.tip, t.tangency, s.tangency);
  if (o1 * o2 > 0 || o3 * o4 > 0) return 0;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return 1;

  if (o1 == 0 && o2 == 0) {
    // Collinear: any overlap of positive length is a tangential contact.
    const bool t_tip_on = on_segment(s.tip, s.tangency, t.tip);
    const bool t_tan_on = on_segment(s.tip, s.tangency, t.tangency);
    const bool s_tip_on = on_segment(t.tip, t.tangency, s.tip);
    const bool s_tan_on = on_segment(t.tip, t.tangency, s.tangency);
    const int touching = int(t_tip_on) + int(t_tan_on) + int(s_tip_on) +
                         int(s_tan_on);
    if (touching == 0) return 0;
    if (touching > 1 || t_tip_on || s_tip_on) {
      throw Error(ErrorCode::kTangencyUnresolved,
                  "collinear tangent segments touch");
    }
    return 0;
  }
  if ((o1 == 0 && on_segment(s.tip, s.tangency, t.tip)) ||
      (o3 == 0 && on_segment(t.tip, t.tangency, s.tip))) {
    throw Error(ErrorCode::kTangencyUnresolved,
                "a tip touches the other region's tangent segment");
  }
  // Remaining zero cases put a tangency point on the other segment; that
  // point belongs to the owner's arc and is counted by the arc test.
  return 0;
}

// Crossings of the arcs of `outer` (the larger radius) with the tangent
// segments of `inner`. Each tangent segment runs monotonically in distance
// from the origin between r_inner and 1, so it meets the circle of radius
// r_outer exactly once, at parameter s* = 1 - sqrt(e) with
// e = (r_outer^2 - r_inner^2) / (1 - r_inner^2). The meeting point lies on an
// arc of `outer` unless it is strictly inside one of its teeth.
std::size_t arc_crossings(const GearBoundary& outer, const GearBoundary& inner) {
  const Rational ro2 = square(outer.inner_radius);
  const Rational ri2 = square(inner.inner_radius);
  const Rational e = (ro2 - ri2) / (Rational(1) - ri2);
  std::size_t count = 0;
  for (const Tooth& t : inner.teeth) {
    for (const QuadPoint* tan : {&t.before, &t.after}) {
      bool on_arc = true;
      for (const Tooth& o : outer.teeth) {
        const Rational pq = dot(t.tip, o.tip);
        const QuadNumber tq = tan->x * o.tip.x + tan->y * o.tip.y;
        const QuadNumber step = tq - QuadNumber(pq);
        // x . Q - r_outer^2 = (pq - ro2 + step) - step * sqrt(e)
        const BiquadNumber value(QuadNumber(pq - ro2) + step, -step, e);
        if (value.sign() > 0) {
          on_arc = false;
          break;
        }
      }
      if (on_arc) ++count;
    }
  }
  return count;
}

}  // namespace

GearBoundary gear_boundary(const Rational& inner_radius,
                           std::span<const Point2> tips) {
  if (inner_radius.sign() <= 0 || inner_radius >= Rational(1)) {
    throw Error(ErrorCode::kInvalidInput, "inner radius must lie in (0, 1)");
  }
  if (tips.empty() || tips.size() > kMaxTeeth) {
    throw Error(ErrorCode::kInvalidInput, "a gear needs one to three tips");
  }
  for (std::size_t i = 0; i < tips.size(); ++i) {
    if (norm_sq(tips[i]) != Rational(1)) {
      throw Error(ErrorCode::kInvalidInput, "tip is not on the unit circle");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tips[i] == tips[j]) {
        throw Error(ErrorCode::kInvalidInput, "repeated tip");
      }
    }
  }

  const Rational r2 = square(inner_radius);
  const Rational d = Rational(1) - r2;
  // Tips P, Q (unit vectors) are separated by a nonempty arc iff their
  // angular distance exceeds twice the tooth half-angle arccos(r), i.e.
  // P . Q < cos(2 arccos r) = 2 r^2 - 1.
  const Rational separation = Rational(2) * r2 - Rational(1);
  for (std::size_t i = 0; i < tips.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dot(tips[i], tips[j]) >= separation) {
        throw Error(ErrorCode::kTeethOverlap,
                    "teeth of tips " + std::to_string(j) + " and " +
                        std::to_string(i) + " are not separated");
      }
    }
  }

  GearBoundary g;
  g.inner_radius = inner_radius;
  std::vector<std::size_t> order(tips.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angle_less(tips[a], tips[b]);
  });
  for (std::size_t i : order) {
    g.teeth.push_back({tips[i], i, tangency(tips[i], inner_radius, d, -1),
                       tangency(tips[i], inner_radius, d, +1)});
  }
  const auto exact = [](const Point2& p) {
    return QuadPoint{QuadNumber(p.x), QuadNumber(p.y)};
  };
  for (std::size_t i = 0; i < g.teeth.size(); ++i) {
    const Tooth& t = g.teeth[i];
    const Tooth& next = g.teeth[(i + 1) % g.teeth.size()];
    g.elements.emplace_back(SegmentElement{t.before, exact(t.tip), i});
    g.elements.emplace_back(SegmentElement{exact(t.tip), t.after, i});
    g.elements.emplace_back(ArcElement{t.after, next.before});
  }
  return g;
}

GearRegion make_gear_region(const Rational& inner_radius,
                            std::span<const std::size_t> tip_indices,
                            std::span<const Point2> points) {
  std::vector<Point2> tips;
  for (std::size_t idx : tip_indices) {
    if (idx >= points.size()) {
      throw Error(ErrorCode::kInvalidInput, "tip index out of range");
    }
    tips.push_back(points[idx]);
  }
  GearRegion region{inner_radius, {}, gear_boundary(inner_radius, tips)};
  for (const Tooth& t : region.boundary.teeth) {
    region.tooth_tips.push_back(tip_indices[t.input_index]);
  }
  return region;
}

bool point_in_gear(const GearBoundary& gear, const Point2& p) {
  const Rational r2 = square(gear.inner_radius);
  if (norm_sq(p) <= r2) return true;
  const Rational d = Rational(1) - r2;
  for (const Tooth& t : gear.teeth) {
    if (p == t.tip) return true;
    // Outside the disk, the tooth is the triangle tip / tangency / tangency:
    // the wedge at the tip of half-angle arcsin(r) about the direction to the
    // origin, cut by the chord x . tip = r^2.
    const Point2 w = t.tip - p;
    const Rational along = dot(w, t.tip);
    if (along.sign() < 0) continue;
    if (along * along < d * norm_sq(w)) continue;
    if (dot(p, t.tip) < r2) continue;
    return true;
  }
  return false;
}

std::size_t count_boundary_intersections(const GearBoundary& a,
                                         const GearBoundary& b) {
  if (a.inner_radius == b.inner_radius) {
    throw Error(ErrorCode::kInvalidInput,
                "boundary intersection needs distinct inner radii");
  }
  std::size_t count = 0;
  for (const Tooth& ta : a.teeth) {
    for (const Tooth& tb : b.teeth) {
      if (ta.tip == tb.tip) ++count;
    }
  }
  // Concentric arcs of distinct radii never meet, and the segments of the
  // larger-radius region stay outside the smaller inner circle.
  if (a.inner_radius > b.inner_radius) {
    count += arc_crossings(a, b);
  } else {
    count += arc_crossings(b, a);
  }
  const auto sa = segments_of(a, embed_inner);
  const auto sb = segments_of(b, embed_outer);
  for (const Segment& s : sa) {
    for (const Segment& t : sb) count += segment_crossing(s, t);
  }
  return count;
}

double arc_extent_radians(const ArcElement& arc) {
  const double a0 = std::atan2(arc.from.y.to_double(), arc.from.x.to_double());
  const double a1 = std::atan2(arc.to.y.to_double(), arc.to.x.to_double());
  double ext = a1 - a0;
  while (ext <= 0) ext += 2 * std::numbers::pi;
  return ext;
}

}  // namespace georeduce::geom2d
