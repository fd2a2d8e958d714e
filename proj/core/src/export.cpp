#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"

namespace georeduce::harness {
namespace {

using reductions::CircleInstance;
using reductions::FatTriangleInstance;
using reductions::FriendlyInstance;
using reductions::PlaneInstance;
using reductions::Triangle3DInstance;

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string xy(double x, double y) { return num(x) + "," + num(y); }

std::string xy(const geom2d::QuadPoint& p) { return xy(p.x.to_double(), p.y.to_double()); }

void header(std::ostringstream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.25 -1.25 2.5 2.5\" "
         "width=\"800\" height=\"800\">\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.004\">\n"
      << "<circle id=\"unit-circle\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#999999\"/>\n";
}

void points(std::ostringstream& out, const std::vector<geom2d::Point2>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << "<circle id=\"point-" << i << "\" cx=\"" << num(pts[i].x.to_double())
        << "\" cy=\"" << num(pts[i].y.to_double())
        << "\" r=\"0.012\" fill=\"#000000\" stroke=\"none\"/>\n";
  }
}

std::string gear_path(const geom2d::GearBoundary& gear) {
  std::ostringstream d;
  const double r = gear.inner_radius.to_double();
  bool first = true;
  for (const auto& element : gear.elements) {
    std::visit(
        [&](const auto& e) {
          if (first) {
            d << "M " << xy(e.from) << " ";
            first = false;
          }
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, geom2d::ArcElement>) {
            const int large = geom2d::arc_extent_radians(e) > std::numbers::pi ? 1 : 0;
            d << "A " << num(r) << " " << num(r) << " 0 " << large << " 1 " << xy(e.to)
              << " ";
          } else {
            d << "L " << xy(e.to) << " ";
          }
        },
        element);
  }
  d << "Z";
  return d.str();
}

void triangles(std::ostringstream& out, const std::vector<geom2d::Triangle2>& tris,
               const std::vector<geom2d::Point2>& pts) {
  for (std::size_t t = 0; t < tris.size(); ++t) {
    out << "<polygon id=\"triangle-" << t << "\" stroke=\"#1f77b4\" points=\"";
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& p = pts[tris[t].v[k]];
      out << (k ? " " : "") << xy(p.x.to_double(), p.y.to_double());
    }
    out << "\"/>\n";
  }
}

// The four short arcs at the axis crossings, drawn slightly outside the
// unit circle so they stay visible.
void axis_arcs(std::ostringstream& out, const Rational& alpha_deg) {
  const double a = alpha_deg.to_double() * std::numbers::pi / 180.0;
  const double r = 1.04;
  for (int c = 0; c < 4; ++c) {
    const double mid = c * std::numbers::pi / 2.0;
    out << "<path id=\"arc-" << c << "\" stroke=\"#d62728\" stroke-width=\"0.012\" d=\"M "
        << xy(r * std::cos(mid - a), r * std::sin(mid - a)) << " A " << num(r) << " "
        << num(r) << " 0 0 1 " << xy(r * std::cos(mid + a), r * std::sin(mid + a))
        << "\"/>\n";
  }
}

}  // namespace

std::string export_svg(const Instance& inst) {
  if (!is_planar(kind_of(inst))) {
    throw Error(ErrorCode::kKindMismatch, "SVG export needs a planar instance");
  }
  std::ostringstream out;
  header(out);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FriendlyInstance>) {
          std::vector<geom2d::Point2> pts;
          for (const auto& p : x.points) pts.push_back(p.point);
          for (std::size_t i = 0; i < x.regions.size(); ++i) {
            if (x.regions[i].boundary.elements.empty()) continue;
            out << "<path id=\"region-" << i << "\" stroke=\"#1f77b4\" d=\""
                << gear_path(x.regions[i].boundary) << "\"/>\n";
          }
          points(out, pts);
        } else if constexpr (std::is_same_v<T, FatTriangleInstance>) {
          std::vector<geom2d::Point2> pts;
          for (const auto& p : x.points) pts.push_back(p.point);
          axis_arcs(out, x.alpha);
          triangles(out, x.triangles, pts);
          points(out, pts);
        } else if constexpr (std::is_same_v<T, CircleInstance>) {
          for (std::size_t i = 0; i < x.circles.size(); ++i) {
            const auto& c = x.circles[i];
            out << "<circle id=\"circle-" << i << "\" stroke=\"#1f77b4\" cx=\""
                << num(c.center.x.to_double()) << "\" cy=\""
                << num(c.center.y.to_double()) << "\" r=\""
                << num(std::sqrt(c.radius_sq.to_double())) << "\"/>\n";
          }
          points(out, x.points);
        }
      },
      inst);
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string export_obj(const Instance& inst) {
  std::ostringstream out;
  auto vertex = [&](const geom3d::Point3& p) {
    out << "v " << num(p.x.to_double()) << " " << num(p.y.to_double()) << " "
        << num(p.z.to_double()) << "\n";
  };
  if (const auto* t = std::get_if<Triangle3DInstance>(&inst)) {
    std::size_t next = 1;
    const auto tris = reductions::triangles_of(*t);
    for (std::size_t i = 0; i < tris.size(); ++i) {
      out << "o triangle-" << i << "\n";
      for (const auto& p : tris[i].vertices()) vertex(p);
      const std::size_t k = tris[i].vertices().size();
      out << (k == 3 ? "f" : k == 2 ? "l" : "p");
      for (std::size_t j = 0; j < k; ++j) out << " " << next + j;
      out << "\n";
      next += k;
    }
    return out.str();
  }
  if (const auto* p = std::get_if<PlaneInstance>(&inst)) {
    out << "o lifted-points\n";
    for (const auto& q : p->points) vertex(q);
    out << "p";
    for (std::size_t i = 0; i < p->points.size(); ++i) out << " " << i + 1;
    out << "\n";
    return out.str();
  }
  throw Error(ErrorCode::kKindMismatch, "OBJ export needs a 3D instance");
}

}  // namespace georeduce::harness
