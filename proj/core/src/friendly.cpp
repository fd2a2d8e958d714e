#include <set>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::reductions {
namespace {

constexpr std::size_t kMaxFriendlySetSize = 3;
constexpr std::size_t kMaxFriendlyFrequency = 4;

std::vector<geom2d::Point2> coordinates(const FriendlyInstance& inst) {
  std::vector<geom2d::Point2> pts;
  pts.reserve(inst.points.size());
  for (const auto& p : inst.points) pts.push_back(p.point);
  return pts;
}

MembershipMatrix membership_of(const std::vector<geom2d::GearBoundary>& gears,
                               const std::vector<geom2d::Point2>& pts) {
  MembershipMatrix m(pts.size(), std::vector<bool>(gears.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < gears.size(); ++j) {
      m[i][j] = geom2d::point_in_gear(gears[j], pts[i]);
    }
  }
  return m;
}

MembershipMatrix set_membership(const combinat::SetSystem& s) {
  MembershipMatrix m(s.n, std::vector<bool>(s.sets.size(), false));
  for (std::size_t j = 0; j < s.sets.size(); ++j) {
    for (std::size_t e : s.sets[j]) {
      if (e < s.n) m[e][j] = true;
    }
  }
  return m;
}

std::string first_mismatch(const MembershipMatrix& got,
                           const MembershipMatrix& want) {
  if (got.size() != want.size()) {
    return "point count " + std::to_string(got.size()) + " vs " +
           std::to_string(want.size());
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].size() != want[i].size()) {
      return "shape count differs at point " + std::to_string(i);
    }
    for (std::size_t j = 0; j < got[i].size(); ++j) {
      if (got[i][j] != want[i][j]) {
        return "point " + std::to_string(i) + (got[i][j] ? " in" : " not in") +
               " shape " + std::to_string(j);
      }
    }
  }
  return {};
}

}  // namespace

Rational friendly_radius(std::size_t index, std::size_t n, std::size_t m) {
  const Rational scale = Rational(10) * Rational(n) * Rational(n) * Rational(m);
  return Rational(1) - Rational(index + 1) / scale;
}

FriendlyInstance build_friendly(const combinat::SetSystem& s) {
  if (combinat::max_set_size(s) > kMaxFriendlySetSize) {
    throw Error(ErrorCode::kInvalidInput, "a set has more than 3 elements");
  }
  if (combinat::max_frequency(s) > kMaxFriendlyFrequency) {
    throw Error(ErrorCode::kInvalidInput,
                "an element lies in more than 4 sets");
  }
  for (std::size_t j = 0; j < s.sets.size(); ++j) {
    if (s.sets[j].empty()) {
      throw Error(ErrorCode::kInvalidInput, "set " + std::to_string(j) + " is empty");
    }
    for (std::size_t e : s.sets[j]) {
      if (e >= s.n) throw Error(ErrorCode::kInvalidInput, "element out of range");
    }
  }

  FriendlyInstance inst;
  inst.source = s;
  std::vector<geom2d::Point2> pts;
  for (std::size_t j = 0; j < s.n; ++j) {
    const double angle = 360.0 * static_cast<double>(j) / static_cast<double>(s.n);
    inst.points.push_back(geom2d::unit_circle_point(geom2d::parameter_for_angle(angle)));
    pts.push_back(inst.points.back().point);
  }
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    inst.regions.push_back(geom2d::make_gear_region(
        friendly_radius(i, s.n, s.sets.size()), s.sets[i], pts));
  }

  const auto m = geometric_membership(inst);
  if (auto diff = first_mismatch(m, set_membership(s)); !diff.empty()) {
    throw Error(ErrorCode::kMembershipMismatch, diff);
  }
  return inst;
}

MembershipMatrix geometric_membership(const FriendlyInstance& inst) {
  std::vector<geom2d::GearBoundary> gears;
  for (const auto& r : inst.regions) gears.push_back(r.boundary);
  return membership_of(gears, coordinates(inst));
}

VerificationReport verify_friendly(const FriendlyInstance& inst) {
  namespace c = condition;
  VerificationReport report;
  const auto& s = inst.source;
  const std::size_t n = inst.points.size();
  const std::size_t m = inst.regions.size();

  // Structure: sizes agree with the source and tips index real points.
  {
    std::string detail;
    if (n != s.n) detail = "point count differs from the ground set";
    if (m != s.sets.size()) detail = "region count differs from the set count";
    for (std::size_t j = 0; j < m && detail.empty(); ++j) {
      for (std::size_t p : inst.regions[j].tooth_tips) {
        if (p >= n) detail = "region " + std::to_string(j) + " has a tip out of range";
      }
    }
    report.add(c::kStructure, detail.empty(), detail);
    if (!detail.empty()) return report;
  }
  const auto pts = coordinates(inst);

  {
    std::string detail;
    std::set<std::pair<mpq_class, mpq_class>> seen;
    for (std::size_t i = 0; i < n && detail.empty(); ++i) {
      if (geom2d::norm_sq(pts[i]) != Rational(1)) {
        detail = "point " + std::to_string(i) + " is off the unit circle";
      } else if (!seen.insert({pts[i].x.mpq(), pts[i].y.mpq()}).second) {
        detail = "point " + std::to_string(i) + " is repeated";
      }
    }
    report.add(c::kUnitCircle, detail.empty(), detail);
  }

  // Boundaries are rebuilt from the tip coordinates; a region is convex by
  // construction exactly when the rebuild succeeds.
  std::vector<geom2d::GearBoundary> gears;
  {
    std::string detail;
    for (std::size_t j = 0; j < m; ++j) {
      try {
        gears.push_back(geom2d::make_gear_region(inst.regions[j].inner_radius,
                                                 inst.regions[j].tooth_tips, pts)
                            .boundary);
      } catch (const Error& e) {
        if (detail.empty()) detail = "region " + std::to_string(j) + ": " + e.what();
      }
    }
    report.add(c::kConvexity, detail.empty(), detail);
    if (!detail.empty()) {
      report.add(c::kMembership, false, "not evaluated: a region failed to build");
      return report;
    }
  }

  {
    std::string detail;
    for (std::size_t j = 0; j < m && detail.empty(); ++j) {
      if (inst.regions[j].inner_radius != friendly_radius(j, n, m)) {
        detail = "region " + std::to_string(j) + " radius " +
                 inst.regions[j].inner_radius.str();
      }
    }
    report.add(c::kRadiusSchedule, detail.empty(), detail);
  }
  {
    std::string detail;
    if (n > 0) {
      const Rational lo = Rational(1) - Rational(1) / (Rational(10) * Rational(n) * Rational(n));
      for (std::size_t j = 0; j < m && detail.empty(); ++j) {
        const Rational& r = inst.regions[j].inner_radius;
        if (!(lo <= r && r < Rational(1))) {
          detail = "region " + std::to_string(j) + " radius " + r.str();
        }
      }
    }
    report.add(c::kSimilarSize, detail.empty(), detail);
  }

  const auto geo = membership_of(gears, pts);
  {
    const auto diff = first_mismatch(geo, set_membership(s));
    report.add(c::kMembership, diff.empty(), diff);
  }
  {
    std::string detail;
    std::size_t worst = 0;
    for (std::size_t a = 0; a < m && detail.empty(); ++a) {
      for (std::size_t b = a + 1; b < m && detail.empty(); ++b) {
        try {
          const std::size_t k = geom2d::count_boundary_intersections(gears[a], gears[b]);
          worst = std::max(worst, k);
          if (k > 6) {
            detail = "regions " + std::to_string(a) + ", " + std::to_string(b) +
                     " meet in " + std::to_string(k) + " points";
          }
        } catch (const Error& e) {
          detail = "regions " + std::to_string(a) + ", " + std::to_string(b) + ": " +
                   e.what();
        }
      }
    }
    report.add(c::kIntersections, detail.empty(),
               detail.empty() ? "max " + std::to_string(worst) : detail);
  }
  {
    std::string detail;
    for (std::size_t i = 0; i < n && detail.empty(); ++i) {
      const auto depth = static_cast<std::size_t>(
          std::count(geo[i].begin(), geo[i].end(), true));
      if (depth > kMaxFriendlyFrequency) {
        detail = "point " + std::to_string(i) + " has depth " + std::to_string(depth);
      }
    }
    report.add(c::kFrequency, detail.empty(), detail);
  }
  {
    std::ostringstream detail;
    bool ok = false;
    try {
      const auto geometric = combinat::exact_min_set_cover(cover_system(geo, n, m));
      const auto original = combinat::exact_min_set_cover(s);
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
