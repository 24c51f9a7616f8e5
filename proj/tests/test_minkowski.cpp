#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "hypell/minkowski.hpp"

using namespace hypell;

TEST(MinkIp, SignatureExamples) {
  EXPECT_EQ(mink_ip({1, 0, 0}, {1, 0, 0}), -1.0);
  EXPECT_EQ(mink_ip({0, 1, 0}, {0, 1, 0}), 1.0);
  EXPECT_EQ(mink_ip({1, 0, 0}, {2, 1, 1}), -2.0);
}

TEST(MinkIp, BilinearSymmetric) {
  gen::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x = Vec3::Random(), y = Vec3::Random(), z = Vec3::Random();
    const double a = rng.uniform(-3, 3);
    EXPECT_NEAR(mink_ip(x, y), mink_ip(y, x), 1e-15);
    EXPECT_NEAR(mink_ip(a * x + z, y), a * mink_ip(x, y) + mink_ip(z, y), 1e-13);
  }
}

TEST(Distance, Examples) {
  const MinkVector o(1, 0, 0);
  EXPECT_EQ(hyp_distance(o, o), 0.0);
  EXPECT_NEAR(hyp_distance(o, {std::cosh(1.0), std::sinh(1.0), 0}), 1.0, 1e-14);
  EXPECT_THROW(hyp_distance(o, {0.5, 0, 0}), Error);
}

TEST(Distance, SymmetricAndTriangle) {
  gen::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto x = rng.point(), y = rng.point(), z = rng.point();
    EXPECT_EQ(hyp_distance(x, y), hyp_distance(y, x));
    EXPECT_LE(hyp_distance(x, z), hyp_distance(x, y) + hyp_distance(y, z) + 1e-12);
  }
}

TEST(Distance, AgreesWithArccosh) {
  gen::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto x = rng.point(3.0), y = rng.point(3.0);
    const double ref = std::acosh(std::max(1.0, -mink_ip(x, y)));
    EXPECT_NEAR(hyp_distance(x, y), ref, 1e-7 + 1e-9 * ref);
  }
}

TEST(Rotation, PrintedExamples) {
  EXPECT_TRUE(rotation_from_quat({1, 0, 0, 0}).matrix().isApprox(Mat3::Identity()));
  const Mat3 m = rotation_from_quat({0, -1, 0, 0}).matrix();
  EXPECT_TRUE(m.isApprox(Vec3(1, -1, -1).asDiagonal().toDenseMatrix()));
  EXPECT_THROW(rotation_from_quat({1, 1, 0, 0}), Error);
}

TEST(Rotation, PreservesInnerProduct) {
  gen::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto q = rotation_from_quat(rng.quat());
    EXPECT_LT(q.orthogonality_defect(), 1e-10);
    const Vec3 x = Vec3::Random(), y = Vec3::Random();
    EXPECT_NEAR(mink_ip(q * x, q * y), mink_ip(x, y), 1e-10);
    EXPECT_TRUE((q.inverse() * q.matrix()).isApprox(Mat3::Identity(), 1e-12));
  }
}

TEST(Rotation, AboutOriginTurnsByZeta) {
  const auto r = MinkRotation::about_origin(0.7);
  const MinkVector p = r * MinkVector(std::cosh(1.0), std::sinh(1.0), 0);
  EXPECT_NEAR(p[0], std::cosh(1.0), 1e-14);
  EXPECT_NEAR(std::abs(std::atan2(p[2], p[1])), 0.7, 1e-14);
}

TEST(HalfTurn, OriginIsPointReflection) {
  EXPECT_TRUE(half_turn_about({1, 0, 0}).matrix().isApprox(Vec3(1, -1, -1).asDiagonal().toDenseMatrix()));
}

TEST(HalfTurn, InvolutionFixingAxis) {
  gen::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto r = rng.point(2.5);
    const auto h = half_turn_about(r);
    EXPECT_LT((h.matrix() * h.matrix() - Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-12 * r[0] * r[0] * r[0] * r[0]);
    EXPECT_LT((h * r - r).norm(), 1e-12 * r[0] * r[0] * r[0]);
    // Swaps any point with its mirror image through r.
    const auto x = rng.point();
    EXPECT_NEAR(hyp_distance(x, r), hyp_distance(h * x, r), 1e-9);
  }
  EXPECT_THROW(half_turn_about({0, 1, 0}), Error);
}

TEST(Midpoint, Examples) {
  const MinkVector o(1, 0, 0);
  EXPECT_TRUE(hyp_midpoint(o, o).isApprox(o));
  const auto m = hyp_midpoint(o, {std::cosh(2.0), std::sinh(2.0), 0});
  EXPECT_NEAR(m[0], std::cosh(1.0), 1e-14);
  EXPECT_NEAR(m[1], std::sinh(1.0), 1e-14);
  EXPECT_NEAR(m[2], 0.0, 1e-15);
}

TEST(Midpoint, Equidistant) {
  gen::Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto a = rng.point(), b = rng.point();
    const auto m = hyp_midpoint(a, b);
    EXPECT_TRUE(is_point(m));
    EXPECT_NEAR(hyp_distance(a, m), hyp_distance(m, b), 1e-12);
    EXPECT_NEAR(hyp_distance(a, m), 0.5 * hyp_distance(a, b), 1e-12);
  }
}

TEST(Klein, ProjectAndLift) {
  EXPECT_TRUE(klein_project({1, 0, 0}).isZero());
  EXPECT_NEAR(klein_project({std::cosh(1.0), std::sinh(1.0), 0})[0], std::tanh(1.0), 1e-15);
  EXPECT_THROW(klein_lift(1.0, 0.0), Error);
  EXPECT_THROW(klein_lift(0.8, 0.7), Error);
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto x = rng.point(3.0);
    const Vec2 u = klein_project(x);
    EXPECT_LT(u.squaredNorm(), 1.0);
    EXPECT_LT((klein_lift(u) - x).norm(), 1e-12 * x[0]);
  }
}

TEST(Klein, LinesBecomeChords) {
  gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.point(), b = rng.point();
    const double d = hyp_distance(a, b);
    if (d < 1e-3) continue;
    const MinkVector dir = unit_spacelike(b + mink_ip(a, b) * a);
    const auto c = geodesic_point(a, dir, rng.uniform(-1.0, 2.0) * d);
    EXPECT_NEAR(hyp_distance(b, geodesic_point(a, dir, d)), 0.0, 1e-6);
    const Vec2 pa = klein_project(a), pb = klein_project(b), pc = klein_project(c);
    const Vec2 e = pb - pa, f = pc - pa;
    EXPECT_NEAR(e[0] * f[1] - e[1] * f[0], 0.0, 1e-10);
  }
}

TEST(Boost, MovesPointToOrigin) {
  gen::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto c = rng.point(2.0);
    const Mat3 b = boost_to_origin(c);
    EXPECT_LT((b * c - MinkVector(1, 0, 0)).norm(), 1e-12 * c[0]);
    EXPECT_LT((b.transpose() * metric() * b - metric()).cwiseAbs().maxCoeff(), 1e-11 * c[0] * c[0]);
    EXPECT_LT((boost_from_origin(c) * b - Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-11 * c[0] * c[0]);
  }
}
