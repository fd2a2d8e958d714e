#include "georeduce/geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "georeduce/errors.hpp"

namespace georeduce::geom2d {

UnitCirclePoint unit_circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = Rational(1) + t2;
  return {t, {(Rational(1) - t2) / den, (Rational(2) * t) / den}};
}

Rational parameter_for_angle(double degrees) {
  double a = std::fmod(degrees, 360.0);
  if (a > 180.0) a -= 360.0;
  if (a <= -180.0) a += 360.0;
  if (a == 180.0) return Rational(kParameterClamp);
  const double t = std::tan(a * std::numbers::pi / 360.0);
  if (t >= static_cast<double>(kParameterClamp)) return Rational(kParameterClamp);
  if (t <= -static_cast<double>(kParameterClamp)) {
    return Rational(-kParameterClamp);
  }
  return Rational::round_to_denominator(t, kParameterDenominator);
}

int orientation(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q - p, r - p).sign();
}

int cocircular_sign(const Point2& p, const Point2& q, const Point2& r,
                    const Point2& s) {
  const int o = orientation(p, q, r);
  if (o == 0) {
    throw Error(ErrorCode::kDegenerateInput,
                "cocircular_sign: first three points are collinear");
  }
  const Point2 a = p - s;
  const Point2 b = q - s;
  const Point2 c = r - s;
  const Rational aa = norm_sq(a);
  const Rational bb = norm_sq(b);
  const Rational cc = norm_sq(c);
  const Rational det = a.x * (b.y * cc - bb * c.y) -
                       a.y * (b.x * cc - bb * c.x) +
                       aa * (b.x * c.y - b.y * c.x);
  return det.sign() * o;
}

std::optional<std::array<std::size_t, 4>> find_cocircular_quadruple(
    std::span<const Point2> points) {
  // With x = X / W, y = Y / W the lifted row (X W, Y W, X^2 + Y^2, W^2) is
  // the rational row (x, y, x^2 + y^2, 1) scaled by W^2 > 0, so the integer
  // 4x4 determinant vanishes exactly when the rational one does.
  const std::size_t n = points.size();
  std::vector<std::array<mpz_class, 4>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class& x = points[i].x.mpq();
    const mpq_class& y = points[i].y.mpq();
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    const mpz_class X = x.get_num() * (w / x.get_den());
    const mpz_class Y = y.get_num() * (w / y.get_den());
    rows[i] = {X * w, Y * w, X * X + Y * Y, w * w};
  }
  // 2x2 minors of every row pair, columns (01, 02, 03, 12, 13, 23).
  constexpr std::array<std::array<int, 2>, 6> kCols{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::vector<std::array<mpz_class, 6>> minors(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t k = 0; k < 6; ++k) {
        const auto [i, j] = kCols[k];
        minors[a * n + b][k] = rows[a][i] * rows[b][j] - rows[a][j] * rows[b][i];
      }
    }
  }
  mpz_class det;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& s = minors[a * n + b];
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const auto& t = minors[c * n + d];
          det = s[0] * t[5] - s[1] * t[4] + s[2] * t[3] + s[3] * t[2] -
                s[4] * t[1] + s[5] * t[0];
          if (det == 0) return std::array<std::size_t, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

Circle circle_through(const Point2& p, const Point2& q, const Point2& r) {
  const Point2 b = q - p;
  const Point2 c = r - p;
  const Rational d = Rational(2) * cross(b, c);
  if (d.is_zero()) {
    throw Error(ErrorCode::kDegenerateInput,
                "circle_through: points are collinear");
  }
  const Rational bb = norm_sq(b);
  const Rational cc = norm_sq(c);
  const Point2 offset{(bb * c.y - cc * b.y) / d, (cc * b.x - bb * c.x) / d};
  return {p + offset, norm_sq(offset)};
}

std::vector<std::size_t> convex_hull(std::span<const Point2> points) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto less = [&](std::size_t i, std::size_t j) {
    if (points[i].x != points[j].x) return points[i].x < points[j].x;
    if (points[i].y != points[j].y) return points[i].y < points[j].y;
    return i < j;
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t i, std::size_t j) {
                            return points[i] == points[j];
                          }),
              order.end());
  if (order.size() <= 2) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 &&
           orientation(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) {
      --k;
    }
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t idx = order.size() - 1; idx-- > 0;) {
    const std::size_t i = order[idx];
    while (k >= lower &&
           orientation(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) {
      --k;
    }
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

bool in_strictly_convex_position(std::span<const Point2> points) {
  return convex_hull(points).size() == points.size();
}

bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b,
                       const Point2& c) {
  const int o1 = orientation(a, b, p);
  const int o2 = orientation(b, c, p);
  const int o3 = orientation(c, a, p);
  const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

std::size_t smallest_angle_vertex(const Triangle2& tri,
                                  std::span<const Point2> points) {
  const Point2& a = points[tri.v[0]];
  const Point2& b = points[tri.v[1]];
  const Point2& c = points[tri.v[2]];
  if (orientation(a, b, c) == 0) {
    throw Error(ErrorCode::kDegenerateInput, "degenerate triangle");
  }
  // The smallest angle faces the shortest side.
  const std::array<Rational, 3> opposite{norm_sq(c - b), norm_sq(a - c),
                                         norm_sq(b - a)};
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (opposite[i] < opposite[best]) best = i;
  }
  return best;
}

bool min_angle_in_range(const Triangle2& tri, std::span<const Point2> points,
                        const Rational& lo_deg, const Rational& hi_deg) {
  const std::size_t i = smallest_angle_vertex(tri, points);
  return angle_in_range(points[tri.v[i]], points[tri.v[(i + 1) % 3]],
                        points[tri.v[(i + 2) % 3]], lo_deg, hi_deg);
}

bool angle_in_range(const Point2& apex, const Point2& b, const Point2& c,
                    const Rational& lo_deg, const Rational& hi_deg) {
  return compare_angle(apex, b, c, lo_deg) > 0 &&
         compare_angle(apex, b, c, hi_deg) < 0;
}

Rational squared_diameter(const Triangle2& tri, std::span<const Point2> points) {
  const Point2& a = points[tri.v[0]];
  const Point2& b = points[tri.v[1]];
  const Point2& c = points[tri.v[2]];
  return std::max({norm_sq(a - b), norm_sq(b - c), norm_sq(c - a)});
}

bool diameter_in_range(const Triangle2& tri, std::span<const Point2> points,
                       const Rational& delta) {
  const Rational d2 = squared_diameter(tri, points);
  if (d2 > Rational(4)) return false;
  const Rational lower = Rational(2) - delta;
  if (lower.sign() <= 0) return true;
  return d2 > lower * lower;
}

}  // namespace georeduce::geom2d
