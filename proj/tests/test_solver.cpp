#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "hypell/certificate.hpp"
#include "hypell/deformation.hpp"
#include "hypell/enclosing.hpp"
#include "hypell/hull.hpp"
#include "oracles.hpp"

using namespace hypell;

namespace {

std::vector<MinkVector> cloud(gen::Rng& rng, int n, double radius, const Vec2& shift = Vec2::Zero(),
                              double squash = 1.0) {
  std::vector<MinkVector> pts;
  for (int i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(rng.uniform()), a = rng.uniform(0, 2 * std::numbers::pi);
    pts.push_back(exp_origin(Vec2(r * std::cos(a), squash * r * std::sin(a)) + shift));
  }
  return pts;
}

std::vector<MinkVector> on_ellipse(const EllipseMatrix& e, int n, double phase = 0.1) {
  std::vector<MinkVector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(e.boundary_point(phase + 2 * std::numbers::pi * i / n));
  return pts;
}


}  // namespace

// ------------------------------------------------------------------ hull

TEST(Hull, Triangle) {
  const auto ps = PointSet::from_klein({{0.1, 0.1}, {-0.3, 0.2}, {0.2, -0.4}});
  EXPECT_EQ(convex_hull(ps).size(), 3u);
}

TEST(Hull, InteriorPointDropped) {
  const auto ps = PointSet::from_klein({{-0.5, -0.5}, {0.5, -0.5}, {0.0, 0.6}, {0.0, 0.0}});
  const auto h = convex_hull(ps);
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(std::count(h.begin(), h.end(), 3u), 0);
}

TEST(Hull, SquareCounterclockwise) {
  const auto ps = PointSet::from_klein({{0.3, 0.3}, {-0.3, -0.3}, {0.3, -0.3}, {-0.3, 0.3}, {0.1, 0.0}});
  const auto h = convex_hull(ps);
  ASSERT_EQ(h.size(), 4u);
  double area2 = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec2 a = ps.klein()[h[i]], b = ps.klein()[h[(i + 1) % h.size()]];
    area2 += a.x() * b.y() - a.y() * b.x();
  }
  EXPECT_NEAR(area2, 2 * 0.36, 1e-12);
}

TEST(Hull, DegenerateInput) {
  EXPECT_THROW(PointSet::from_klein({{0.1, 0.1}, {0.2, 0.2}}), Error);
  EXPECT_THROW(PointSet::from_klein({{0.1, 0.1}, {0.2, 0.2}, {-0.3, -0.3}}), Error);
  EXPECT_THROW(PointSet::from_klein({{0.1, 0.1}, {1.2, 0.2}, {-0.3, 0.3}}), Error);
}

// ------------------------------------------------------------------ inscribed circle

TEST(Inscribed, EquilateralTriangleCentered) {
  std::vector<MinkVector> tri;
  for (int k = 0; k < 3; ++k) tri.push_back(exp_origin(0.8 * Vec2(std::cos(0.3 + 2 * M_PI * k / 3), std::sin(0.3 + 2 * M_PI * k / 3))));
  const auto c = inscribed_circle(PointSet(tri));
  EXPECT_LT(hyp_distance(c.center, {1, 0, 0}), 1e-6);
  // Distance from the centroid to each side is the same.
  const auto n = edge_normals(hull_points(PointSet(tri)));
  for (const auto& e : n) EXPECT_NEAR(std::asinh(mink_ip(e, MinkVector(1, 0, 0))), c.radius, 1e-9);
}

TEST(Inscribed, ShrinksWithTheHull) {
  gen::Rng rng(50);
  const auto base = cloud(rng, 10, 1.0);
  double prev = INFINITY;
  for (double s : {1.0, 0.7, 0.4, 0.2, 0.1, 0.05}) {
    std::vector<MinkVector> pts;
    for (const auto& p : base) pts.push_back(exp_origin(s * log_origin(p)));
    const double r = inscribed_circle(PointSet(pts)).radius;
    EXPECT_LT(r, prev);
    EXPECT_GT(r, 0);
    prev = r;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(Inscribed, CircleInsideHull) {
  gen::Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const PointSet ps(cloud(rng, 12, 1.2, Vec2(0.3, -0.2)));
    const auto c = inscribed_circle(ps);
    const auto n = edge_normals(hull_points(ps));
    const auto circ = EllipseMatrix::circle(c.center, c.radius);
    for (int k = 0; k < 200; ++k) EXPECT_GT(hull_depth(n, circ.boundary_point(2 * M_PI * k / 200)), -1e-9);
  }
}

// ------------------------------------------------------------------ fixed axes

TEST(FixedAxes, RecoversGeneratingEllipse) {
  const auto e = transform(EllipseMatrix::diagonal(1.6, 4.0), rotation_from_quat({std::sqrt(1.0 - 0.01 + 0.0225 + 0.0144), 0.1, 0.15, 0.12}).matrix());
  const auto pts = on_ellipse(e, 9);
  const AxisFrame f{e.center(), e.major_axis(), e.minor_axis()};
  const auto r = min_ellipse_fixed_axes(pts, f);
  EXPECT_NEAR(r.ellipse.nu1(), 1.6, 1e-7);
  EXPECT_NEAR(r.ellipse.nu2(), 4.0, 1e-7);
  EXPECT_GE(r.contacts.size(), 1u);
}

TEST(FixedAxes, SymmetricOrbitGivesCircle) {
  std::vector<MinkVector> pts;
  for (int k = 0; k < 4; ++k) pts.push_back(exp_origin(0.7 * Vec2(std::cos(0.4 + k * M_PI / 2), std::sin(0.4 + k * M_PI / 2))));
  const auto r = min_ellipse_fixed_axes(pts, AxisFrame::at({1, 0, 0}));
  EXPECT_TRUE(r.ellipse.is_circle());
  EXPECT_NEAR(r.ellipse.semiaxes().first, 0.7, 1e-8);
  const auto g = oracle::fixed_axes(pts, AxisFrame::at({1, 0, 0}));
  EXPECT_NEAR(r.area, g.value, 1e-6);
}

TEST(FixedAxes, MatchesGridOracle) {
  gen::Rng rng(52);
  for (int t = 0; t < 10; ++t) {
    const auto pts = cloud(rng, 6 + t, 0.8, Vec2(0.1, 0.2), 0.6);
    const auto f = AxisFrame::at(exp_origin(Vec2(0.1, 0.15)), rng.uniform(0, M_PI));
    const auto r = min_ellipse_fixed_axes(pts, f);
    const auto g = oracle::fixed_axes(pts, f);
    EXPECT_NEAR(r.area, g.value, 1e-6);
    EXPECT_LE(r.area, g.value + 1e-12);
    for (const auto& p : pts) EXPECT_LE(r.ellipse.quadratic_form(p), 1e-9);
    EXPECT_GE(r.contacts.size(), 1u);
  }
}

TEST(FixedAxes, RejectsBadFrame) {
  AxisFrame f = AxisFrame::at({1, 0, 0});
  f.e2 = f.e2 * 2.0;
  const std::vector<MinkVector> pts{exp_origin(Vec2(0.1, 0)), exp_origin(Vec2(0, 0.2)), exp_origin(Vec2(-0.1, -0.1))};
  EXPECT_THROW(min_ellipse_fixed_axes(pts, f), Error);
}

// ------------------------------------------------------------------ fixed center

TEST(FixedCenter, CircleAboutCenter) {
  const MinkVector c = exp_origin(Vec2(0.3, -0.4));
  const auto pts = on_ellipse(EllipseMatrix::circle(c, 0.9), 7);
  const auto r = min_ellipse_fixed_center(pts, c);
  EXPECT_TRUE(r.ellipse.is_circle());
  EXPECT_NEAR(r.ellipse.semiaxes().first, 0.9, 1e-8);
  EXPECT_EQ(r.contacts.size(), 7u);
}

TEST(FixedCenter, OffCenterCostsArea) {
  const auto pts = on_ellipse(EllipseMatrix::circle({1, 0, 0}, 0.9), 8);
  const double a0 = min_ellipse_fixed_center(pts, {1, 0, 0}).area;
  for (double d : {1e-3, 1e-2, 0.1}) EXPECT_GT(min_ellipse_fixed_center(pts, exp_origin(Vec2(d, 0.5 * d))).area, a0);
}

TEST(FixedCenter, MatchesGridOracle) {
  gen::Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const auto pts = cloud(rng, 6 + 3 * t, 0.7, Vec2(0.05, -0.1), 0.5);
    const MinkVector c = exp_origin(Vec2(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)));
    const auto r = min_ellipse_fixed_center(pts, c);
    const auto g = oracle::fixed_center(pts, c);
    EXPECT_NEAR(r.area, g.value, 1e-6);
    EXPECT_LE(r.area, g.value + 1e-12);
    for (const auto& p : pts) EXPECT_LE(r.ellipse.quadratic_form(p), 1e-9);
  }
}

TEST(FixedCenter, IndependentOfPointOrder) {
  gen::Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    auto pts = cloud(rng, 15, 0.6, Vec2::Zero(), 0.4);
    const auto a = min_ellipse_fixed_center(pts, {1, 0, 0});
    std::reverse(pts.begin(), pts.end());
    std::swap(pts[0], pts[7]);
    const auto b = min_ellipse_fixed_center(pts, {1, 0, 0});
    EXPECT_LT((a.ellipse.matrix() - b.ellipse.matrix()).norm(), 1e-7);
  }
}

TEST(FixedCenter, InBetweenOfEqualAreaPairIsSmaller) {
  // Two distinct equal-area concentric ellipses enclosing the same points.
  const auto a = EllipseMatrix::diagonal(1.5, 4.0);
  const auto b = transform(a, MinkRotation::about_origin(0.8).matrix());
  gen::Rng rng(55);
  std::vector<MinkVector> pts;
  while (pts.size() < 20) {
    const auto x = rng.point(1.2);
    if (a.quadratic_form(x) < 0 && b.quadratic_form(x) < 0) pts.push_back(x);
  }
  const auto mid = in_between(a, b, 0.5);
  for (const auto& p : pts) EXPECT_LT(mid.quadratic_form(p), 0);
  EXPECT_LT(area_gaps(mid.gap1(), mid.gap2()), area(1.5, 4.0));
  EXPECT_LE(min_ellipse_fixed_center(pts, {1, 0, 0}).area, area_gaps(mid.gap1(), mid.gap2()));
}

// ------------------------------------------------------------------ general

TEST(MinEllipse, CirclePoints) {
  const MinkVector c = exp_origin(Vec2(-0.2, 0.25));
  const auto pts = on_ellipse(EllipseMatrix::circle(c, 0.5), 10);
  for (std::uint64_t seed : {0u, 3u}) {
    const auto r = min_ellipse(PointSet(pts), {.seed = seed});
    EXPECT_LT(hyp_distance(r.ellipse.center(), c), 1e-6);
    EXPECT_NEAR(r.area, circle_area(0.5), 1e-9);
  }
}

TEST(MinEllipse, Equivariant) {
  gen::Rng rng(56);
  for (int t = 0; t < 4; ++t) {
    const auto pts = cloud(rng, 12, 0.6, Vec2(0.1, 0.0), 0.5);
    const Mat3 g = rotation_from_quat(rng.quat(0.3)).matrix();
    std::vector<MinkVector> moved;
    for (const auto& p : pts) moved.push_back(g * p);
    const auto a = min_ellipse(PointSet(pts));
    const auto b = min_ellipse(PointSet(moved));
    EXPECT_NEAR(a.area, b.area, 1e-8);
    EXPECT_LT(hyp_distance(g * a.ellipse.center(), b.ellipse.center()), 1e-4);
  }
}

TEST(MinEllipse, ContainsAndTouches) {
  gen::Rng rng(57);
  for (int t = 0; t < 6; ++t) {
    const auto pts = cloud(rng, 8, 0.9, Vec2(0.2, 0.1), 0.6);
    const auto r = min_ellipse(PointSet(pts));
    for (const auto& p : pts) EXPECT_LE(r.ellipse.quadratic_form(p), 1e-9);
    EXPECT_GE(r.contacts.size(), 3u);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.spread, 1e-8);
  }
}

TEST(MinEllipse, MatchesCenterGrid) {
  gen::Rng rng(58);
  for (int t = 0; t < 3; ++t) {
    const PointSet ps(cloud(rng, 10 + 10 * t, 0.5, Vec2(0.0, 0.1), 0.7));
    const auto r = min_ellipse(ps);
    const auto g = oracle::general(ps);
    EXPECT_NEAR(r.area, g.value, 1e-5);
  }
}

// ------------------------------------------------------------------ two circles

TEST(TwoCircle, InvalidConfigurations) {
  const auto c = EllipseMatrix::circle({1, 0, 0}, 1.0);
  EXPECT_THROW(two_circle_shrink(c, c), Error);
  EXPECT_THROW(two_circle_shrink(c, EllipseMatrix::circle(exp_origin(Vec2(2.5, 0)), 1.0)), Error);
  EXPECT_THROW(two_circle_shrink(c, EllipseMatrix::circle(exp_origin(Vec2(0.5, 0)), 0.8)), Error);
  EXPECT_THROW(two_circle_shrink(c, EllipseMatrix::diagonal(1.5, 3)), Error);
}

TEST(TwoCircle, UnitSeparation) {
  const auto c0 = EllipseMatrix::circle(exp_origin(Vec2(-0.5, 0)), 1.0);
  const auto c1 = EllipseMatrix::circle(exp_origin(Vec2(0.5, 0)), 1.0);
  const auto s = two_circle_shrink(c0, c1);
  EXPECT_LT(circle_area(s.radius), 2 * M_PI * (std::cosh(1.0) - 1));
  EXPECT_NEAR(hyp_distance(s.s0, s.s1), 2 * s.radius, 1e-12);
  EXPECT_NEAR(c0.quadratic_form(s.s0), 0, 1e-12);
  EXPECT_NEAR(c1.quadratic_form(s.s1), 0, 1e-12);
}

TEST(TwoCircle, CoversCommonInterior) {
  gen::Rng rng(59);
  const auto c0 = EllipseMatrix::circle(exp_origin(Vec2(0.1, 0.2)), 1.0);
  const auto c1 = transform(c0, rotation_from_quat({std::cosh(0.35), 0, std::sinh(0.35) * 0.6, std::sinh(0.35) * 0.8}).matrix());
  const auto s = two_circle_shrink(c0, c1);
  int n = 0;
  while (n < 1000) {
    const auto x = rng.point(2.5);
    if (c0.quadratic_form(x) >= 0 || c1.quadratic_form(x) >= 0) continue;
    ++n;
    EXPECT_LE(s.circle.quadratic_form(x), 1e-12);
  }
}

// ------------------------------------------------------------------ certificate

TEST(SolveR, CircleAndRoundTrip) {
  EXPECT_NEAR(solve_R_from_area(0.4, circle_area(0.4)), 0.4, 1e-12);
  for (double R : {0.5, 1.0, 2.5, 6.0}) EXPECT_NEAR(solve_R_from_area(0.3, area_semiaxes(R, 0.3)), R, 1e-9);
  double prev = 0.3;
  for (double S = circle_area(0.3) * 1.1; S < 20; S *= 1.5) {
    const double R = solve_R_from_area(0.3, S);
    EXPECT_GT(R, prev);
    EXPECT_NEAR(area_semiaxes(R, 0.3), S, 1e-10 * std::max(1.0, S));
    prev = R;
  }
  EXPECT_THROW(solve_R_from_area(0.4, 0.5 * circle_area(0.4)), Error);
}

TEST(Certify, NearCircularIsUnique) {
  gen::Rng rng(60);
  std::vector<MinkVector> pts;
  for (int k = 0; k < 12; ++k) {
    const double a = 2 * M_PI * k / 12 + 0.05 * rng.uniform(), r = 0.2 * (1 - 0.03 * rng.uniform());
    pts.push_back(exp_origin(Vec2(r * std::cos(a), r * std::sin(a))));
  }
  const auto rep = certify(PointSet(pts));
  EXPECT_EQ(rep.certificate.verdict, Verdict::unique);
  EXPECT_LE(rep.certificate.H_value, 0);
  EXPECT_TRUE(rep.axes_in_interval);
  EXPECT_LE(rep.certificate.rho, rep.certificate.R);
  EXPECT_LE(rep.certificate.nu1, rep.certificate.nu2);
}

TEST(Certify, ElongatedIsInconclusive) {
  gen::Rng rng(61);
  std::vector<MinkVector> pts;
  for (int k = 0; k < 12; ++k) {
    const double a = 2 * M_PI * k / 12, r = 0.2;
    pts.push_back(stretch_along_axis(exp_origin(Vec2(r * std::cos(a), r * std::sin(a))), 40));
  }
  const auto rep = certify(PointSet(pts));
  EXPECT_EQ(rep.certificate.verdict, Verdict::inconclusive);
  EXPECT_GT(rep.certificate.H_value, 0);
}

TEST(Certify, VerdictMonotone) {
  // Along rho up or S down the verdict never goes from unique to inconclusive.
  for (double rho : {0.1, 0.3, 0.8}) {
    for (double ratio : {1.2, 2.0, 4.0, 10.0}) {
      const double S = ratio * circle_area(rho);
      bool seen_unique = false;
      for (int k = 0; k <= 10; ++k) {
        const double s = S - (S - circle_area(rho)) * k / 10.0;
        const bool u = certify_from(rho, s).verdict == Verdict::unique;
        EXPECT_FALSE(seen_unique && !u);
        seen_unique = seen_unique || u;
      }
    }
  }
}
