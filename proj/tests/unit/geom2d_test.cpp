#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "georeduce/errors.hpp"
#include "georeduce/geom2d.hpp"
#include "oracles.hpp"

namespace georeduce::geom2d {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidInput;
}

TEST(UnitCirclePoint, Examples) {
  EXPECT_EQ(unit_circle_point(0).point, (Point2{1, 0}));
  EXPECT_EQ(unit_circle_point(1).point, (Point2{0, 1}));
  EXPECT_EQ(unit_circle_point(Rational(1, 2)).point, (Point2{Rational(3, 5), Rational(4, 5)}));
}

TEST(UnitCirclePoint, AlwaysOnTheCircleAndInjective) {
  testing::Gen gen(1);
  for (int i = 0; i < 100000; ++i) {
    const Rational t = gen.rational(100000, 1000);
    EXPECT_EQ(norm_sq(unit_circle_point(t).point), Rational(1));
  }
  std::vector<Point2> seen;
  for (long k = -50; k <= 50; ++k) seen.push_back(unit_circle_point(Rational(k, 7)).point);
  for (std::size_t a = 0; a < seen.size(); ++a) {
    for (std::size_t b = a + 1; b < seen.size(); ++b) EXPECT_NE(seen[a], seen[b]);
  }
}

TEST(ParameterForAngle, HitsTheTargetAngle) {
  for (double deg : {0.0, 10.0, 45.0, 90.0, 135.0, 179.0, 225.0, 270.0, 359.5, -30.0}) {
    const auto p = unit_circle_point(parameter_for_angle(deg)).point;
    double got = std::atan2(p.y.to_double(), p.x.to_double()) * 180.0 / M_PI;
    double want = std::fmod(deg + 360.0, 360.0);
    if (want > 180.0) want -= 360.0;
    EXPECT_NEAR(got, want, 1e-3) << deg;
  }
  // 180 degrees is unreachable at finite t; the clamp lands next to it.
  const auto p = unit_circle_point(parameter_for_angle(180.0)).point;
  EXPECT_LT(p.x.to_double(), -0.999999);
  EXPECT_EQ(parameter_for_angle(180.0), Rational(kParameterClamp));
}

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(CocircularSign, Examples) {
  const auto u = [](long t) { return unit_circle_point(t).point; };
  EXPECT_EQ(cocircular_sign(u(0), u(1), u(-1), u(2)), 0);
  EXPECT_EQ(cocircular_sign(u(0), u(1), u(-1), {0, 0}), 1);
  EXPECT_EQ(cocircular_sign(u(0), u(-1), u(1), {0, 0}), 1);
  // Circle through (0,0), (1,0), (0,1) has centre (1/2, 1/2) and radius^2 1/2;
  // (2,2) is at squared distance 9/2, outside.
  EXPECT_EQ(cocircular_sign({0, 0}, {1, 0}, {0, 1}, {2, 2}), -1);
  EXPECT_EQ(code_of([] { cocircular_sign({0, 0}, {1, 1}, {2, 2}, {0, 1}); }),
            ErrorCode::kDegenerateInput);
}

TEST(CircleThrough, Examples) {
  EXPECT_EQ(circle_through({1, 0}, {0, 1}, {-1, 0}), (Circle{{0, 0}, 1}));
  EXPECT_EQ(circle_through({0, 0}, {2, 0}, {0, 2}), (Circle{{1, 1}, 2}));
  EXPECT_EQ(circle_through({0, 0}, {1, 0}, {1, 1}),
            (Circle{{Rational(1, 2), Rational(1, 2)}, Rational(1, 2)}));
  EXPECT_EQ(code_of([] { circle_through({0, 0}, {1, 1}, {3, 3}); }),
            ErrorCode::kDegenerateInput);
}

TEST(CircleThrough, AgreesWithCocircularSign) {
  testing::Gen gen(2);
  int on = 0;
  for (int i = 0; i < 2000; ++i) {
    const Point2 p = gen.point2(), q = gen.point2(), r = gen.point2();
    if (orientation(p, q, r) == 0) continue;
    const Circle c = circle_through(p, q, r);
    EXPECT_TRUE(on_circle(c, p) && on_circle(c, q) && on_circle(c, r));
    // Half the probes are reflections of p through the centre, which lie on c.
    const Point2 s = (i % 2) ? gen.point2() : Rational(2) * c.center - p;
    const bool exact = on_circle(c, s);
    on += exact;
    EXPECT_EQ(cocircular_sign(p, q, r, s) == 0, exact);
  }
  EXPECT_GT(on, 500);
}

TEST(Predicates, InvariantUnderCommonScaling) {
  testing::Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    const Point2 p = gen.point2(), q = gen.point2(), r = gen.point2(), s = gen.point2();
    const Rational k = gen.positive();
    EXPECT_EQ(orientation(p, q, r), orientation(k * p, k * q, k * r));
    if (orientation(p, q, r) != 0) {
      EXPECT_EQ(cocircular_sign(p, q, r, s), cocircular_sign(k * p, k * q, k * r, k * s));
    }
  }
}

TEST(FindCocircularQuadruple, MatchesPairwiseInCircle) {
  testing::Gen gen(4);
  for (int round = 0; round < 50; ++round) {
    std::vector<Point2> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(gen.point2());
    if (round % 3 == 0) {
      // Force four points onto one circle.
      for (long t = 0; t < 4; ++t) pts[static_cast<std::size_t>(t)] = unit_circle_point(t).point;
    }
    bool expect = false;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        for (std::size_t c = b + 1; c < pts.size(); ++c)
          for (std::size_t d = c + 1; d < pts.size(); ++d) {
            if (orientation(pts[a], pts[b], pts[c]) == 0) {
              // Zero determinant here means all four are collinear.
              expect |= orientation(pts[a], pts[b], pts[d]) == 0 &&
                        orientation(pts[a], pts[c], pts[d]) == 0;
            } else {
              expect |= cocircular_sign(pts[a], pts[b], pts[c], pts[d]) == 0;
            }
          }
    EXPECT_EQ(find_cocircular_quadruple(pts).has_value(), expect) << round;
  }
  EXPECT_FALSE(find_cocircular_quadruple(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}));
}

TEST(ConvexHull, Examples) {
  const std::vector<Point2> a{{0, 0}, {1, 0}, {0, 1}, {Rational(1, 4), Rational(1, 4)}};
  EXPECT_EQ(convex_hull(a), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(convex_hull(std::vector<Point2>{{0, 0}}), (std::vector<std::size_t>{0}));
  std::vector<Point2> circle;
  for (long t : {0, 1, -1, 3}) circle.push_back(unit_circle_point(t).point);
  const auto hull = convex_hull(circle);
  ASSERT_EQ(hull.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(orientation(circle[hull[i]], circle[hull[(i + 1) % 4]],
                          circle[hull[(i + 2) % 4]]),
              1);
  }
  EXPECT_TRUE(in_strictly_convex_position(circle));
  EXPECT_FALSE(in_strictly_convex_position(a));
  // Collinear boundary points are not strict hull vertices.
  EXPECT_FALSE(in_strictly_convex_position(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
}

TEST(ConvexHull, IdempotentAndPermutationInvariant) {
  testing::Gen gen(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<Point2> pts;
    const int n = static_cast<int>(gen.integer(1, 12));
    for (int i = 0; i < n; ++i) pts.push_back({gen.integer(-5, 5), gen.integer(-5, 5)});
    const auto hull = convex_hull(pts);
    std::vector<Point2> hull_pts;
    for (std::size_t i : hull) hull_pts.push_back(pts[i]);
    const auto again = convex_hull(hull_pts);
    std::vector<Point2> again_pts;
    for (std::size_t i : again) again_pts.push_back(hull_pts[i]);
    EXPECT_EQ(again_pts, hull_pts);

    std::vector<Point2> shuffled = pts;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[gen.next() % i]);
    }
    std::vector<Point2> perm_pts;
    for (std::size_t i : convex_hull(shuffled)) perm_pts.push_back(shuffled[i]);
    EXPECT_EQ(perm_pts, hull_pts);
  }
}

TEST(PointInTriangle, ClosedSet) {
  const Point2 a{0, 0}, b{4, 0}, c{0, 4};
  EXPECT_TRUE(point_in_triangle({1, 1}, a, b, c));
  EXPECT_TRUE(point_in_triangle({2, 2}, a, b, c));
  EXPECT_TRUE(point_in_triangle(a, a, b, c));
  EXPECT_FALSE(point_in_triangle({3, 3}, a, b, c));
  EXPECT_TRUE(point_in_triangle({1, 1}, a, c, b));
}

TEST(Angles, RightIsoscelesLimitCase) {
  const std::vector<Point2> pts{{1, 0}, {0, 1}, {-1, 0}};
  EXPECT_EQ(code_of([&] { compare_angle(pts[1], pts[0], pts[2], 90); }),
            ErrorCode::kThresholdCoincidence);
  EXPECT_EQ(code_of([&] { compare_angle(pts[0], pts[1], pts[2], 45); }),
            ErrorCode::kThresholdCoincidence);
  EXPECT_TRUE(angle_in_range(pts[1], pts[0], pts[2], 89, 91));
  EXPECT_TRUE(angle_in_range(pts[0], pts[1], pts[2], 44, 46));
  EXPECT_EQ(code_of([&] { angle_in_range(pts[0], pts[1], pts[2], 45, 46); }),
            ErrorCode::kThresholdCoincidence);
}

TEST(Angles, NearlyEquilateral) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {Rational(1, 2), Rational(7, 8)}};
  const Triangle2 t{{0, 1, 2}};
  EXPECT_TRUE(min_angle_in_range(t, pts, 40, 180));
  const double oracle = std::min({oracles::angle_degrees(pts[0], pts[1], pts[2]),
                                  oracles::angle_degrees(pts[1], pts[2], pts[0]),
                                  oracles::angle_degrees(pts[2], pts[0], pts[1])});
  EXPECT_GT(oracle, 40.0);
  EXPECT_TRUE(min_angle_in_range(t, pts, Rational::round_to_denominator(oracle - 1e-4, 1000000),
                                 Rational::round_to_denominator(oracle + 1e-4, 1000000)));
}

TEST(Angles, DegenerateTriangleThrows) {
  const std::vector<Point2> pts{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(code_of([&] { min_angle_in_range({{0, 1, 2}}, pts, 10, 80); }),
            ErrorCode::kDegenerateInput);
}

TEST(Angles, CompareMatchesFloatingPointOracle) {
  testing::Gen gen(6);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const Point2 a = gen.point2(), b = gen.point2(), c = gen.point2();
    if (orientation(a, b, c) == 0) continue;
    const Rational tau(gen.integer(1, 179 * 8), 8);
    const double angle = oracles::angle_degrees(a, b, c);
    if (std::abs(angle - tau.to_double()) < 1e-7) continue;
    EXPECT_EQ(compare_angle(a, b, c, tau), angle > tau.to_double() ? 1 : -1);
    ++checked;
  }
  EXPECT_GT(checked, 2500);
}

TEST(Angles, SmallestAngleVertex) {
  const std::vector<Point2> pts{{0, 0}, {10, 0}, {0, 1}};
  // The shortest side (0-2) is opposite vertex 1.
  EXPECT_EQ(smallest_angle_vertex({{0, 1, 2}}, pts), 1u);
}

TEST(Diameter, Examples) {
  const std::vector<Point2> a{{1, 0}, {-1, 0}, {0, 1}};
  EXPECT_TRUE(diameter_in_range({{0, 1, 2}}, a, Rational(1, 1000)));
  EXPECT_EQ(squared_diameter({{0, 1, 2}}, a), Rational(4));
  const std::vector<Point2> b{{1, 0}, {0, 1}, {0, -1}};
  EXPECT_EQ(squared_diameter({{0, 1, 2}}, b), Rational(4));
  const std::vector<Point2> c{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_FALSE(diameter_in_range({{0, 1, 2}}, c, Rational(1, 10)));
  // Past 2 the lower end no longer constrains anything.
  EXPECT_TRUE(diameter_in_range({{0, 1, 2}}, c, 5));
  const std::vector<Point2> d{{0, 0}, {3, 0}, {0, 1}};
  EXPECT_FALSE(diameter_in_range({{0, 1, 2}}, d, 5));
}

}  // namespace
}  // namespace georeduce::geom2d
