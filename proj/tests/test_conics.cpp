#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "hypell/conics.hpp"

using namespace hypell;

namespace {

Mat3 diag3(double a, double b, double c) { return Vec3(a, b, c).asDiagonal(); }

Mat3 congruent(const Mat3& m, const Mat3& q) {
  const Mat3 qi = metric() * q.transpose() * metric();
  return qi.transpose() * m * qi;
}

}  // namespace

TEST(MinkEigs, DiagonalAndScaled) {
  auto e = mink_eigs(diag3(-1, 2, 3));
  EXPECT_NEAR(e.values[0], 1, 1e-14);
  EXPECT_NEAR(e.values[1], 2, 1e-14);
  EXPECT_NEAR(e.values[2], 3, 1e-14);
  EXPECT_EQ(e.timelike, 0);
  e = mink_eigs(2.0 * diag3(-1, 2, 3));
  EXPECT_NEAR(e.values[0], 2, 1e-13);
  EXPECT_NEAR(e.values[1], 4, 1e-13);
  EXPECT_NEAR(e.values[2], 6, 1e-13);
}

TEST(MinkEigs, CongruenceInvariantWithSmallResiduals) {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto q = rotation_from_quat(rng.quat(0.8));
    const double n1 = rng.uniform(1.01, 10), n2 = n1 + rng.uniform(0.0, 10);
    const Mat3 m = congruent(diag3(-1, n1, n2), q.matrix());
    const auto e = mink_eigs(m);
    EXPECT_NEAR(e.values[0], 1, 1e-8);
    EXPECT_NEAR(e.values[1], n1, 1e-8 * n2);
    EXPECT_NEAR(e.values[2], n2, 1e-8 * n2);
    for (int k = 0; k < 3; ++k) {
      const Vec3 res = m * e.vectors[k] - e.values[k] * metric() * e.vectors[k];
      EXPECT_LT(res.norm(), 1e-9 * m.norm() * e.vectors[k].norm());
    }
    EXPECT_LT(mink_norm2(e.vectors[e.timelike]), 0.0);
  }
}

TEST(MinkEigs, RejectsComplexPencil) {
  // I*M is a rotation generator here: eigenvalues +-i.
  Mat3 m = Mat3::Zero();
  m(0, 1) = m(1, 0) = 1.0;
  m(2, 2) = 1.0;
  EXPECT_THROW(mink_eigs(m), Error);
}

TEST(Normalize, Examples) {
  auto e = normalize(5.0 * diag3(-1, 2, 3));
  EXPECT_TRUE(e.matrix().isApprox(diag3(-1, 2, 3), 1e-13));
  EXPECT_NEAR(e.nu1(), 2, 1e-13);
  EXPECT_NEAR(e.nu2(), 3, 1e-13);
  EXPECT_FALSE(e.is_circle());
  e = normalize(diag3(-1, 1.5, 1.5));
  EXPECT_TRUE(e.is_circle());
  EXPECT_NEAR(e.nu1(), 1.5, 1e-14);
  try {
    normalize(diag3(-1, 0.5, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::not_an_ellipse);
  }
  EXPECT_NO_THROW(normalize(-2.0 * diag3(-1, 2, 3)));
}

TEST(Normalize, RecoversFrame) {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto q = rotation_from_quat(rng.quat(0.8));
    const double n1 = rng.uniform(1.01, 10), n2 = n1 + rng.uniform(0.01, 10);
    const double scale = rng.uniform(0.1, 10);
    const auto e = normalize(scale * congruent(diag3(-1, n1, n2), q.matrix()));
    const MinkVector c = q * MinkVector(1, 0, 0);
    EXPECT_LT((e.center() - c).norm(), 1e-8 * c[0]);
    EXPECT_NEAR(e.nu1(), n1, 1e-9 * n2);
    EXPECT_NEAR(e.nu2(), n2, 1e-9 * n2);
    const MinkVector axis = q * MinkVector(0, 1, 0);
    EXPECT_NEAR(std::abs(mink_ip(e.major_axis(), axis)), 1.0, 1e-7);
    EXPECT_EQ(contains(e, e.center()), Containment::inside);
    EXPECT_TRUE(e.matrix().isApprox(congruent(diag3(-1, n1, n2), q.matrix()), 1e-9));
  }
}

TEST(Normalize, ElongatedKeepsGap) {
  const double g = 1e-9;
  const auto e = normalize(diag3(-1, 1 + g, 1 + 1e3 * g));
  EXPECT_NEAR(e.gap1() / g, 1.0, 1e-6);
}

TEST(Contains, Examples) {
  const auto e = EllipseMatrix::diagonal(2, 3);
  EXPECT_EQ(contains(e, {1, 0, 0}), Containment::inside);
  EXPECT_NEAR(e.quadratic_form({1, 0, 0}), -1.0, 1e-15);
  // phi = 0 points along x2, cosh^2 theta = nu2 / (nu2 - 1).
  const double ch = std::sqrt(3.0 / 2.0), sh = std::sqrt(ch * ch - 1);
  EXPECT_EQ(contains(e, {ch, 0, sh}), Containment::boundary);
  EXPECT_EQ(contains(e, {std::cosh(5.0), std::sinh(5.0), 0}), Containment::outside);
}

TEST(CenterAxes, DiagonalRotatedAndCircle) {
  auto ca = center_and_axes(EllipseMatrix::diagonal(2, 3));
  EXPECT_TRUE(ca.center.isApprox(MinkVector(1, 0, 0)));
  ASSERT_TRUE(ca.axis_dirs.has_value());
  EXPECT_NEAR(std::abs((*ca.axis_dirs)[0][1]), 1.0, 1e-14);
  EXPECT_NEAR(std::abs((*ca.axis_dirs)[1][2]), 1.0, 1e-14);
  const auto q = rotation_from_quat({std::sqrt(1.25) * std::cos(0.4), std::sqrt(1.25) * std::sin(0.4), 0.5, 0.0});
  ca = center_and_axes(normalize(congruent(diag3(-1, 2, 3), q.matrix())));
  EXPECT_LT((ca.center - q * MinkVector(1, 0, 0)).norm(), 1e-10);
  ca = center_and_axes(normalize(diag3(-1, 2, 2)));
  EXPECT_TRUE(ca.is_circle);
  EXPECT_FALSE(ca.axis_dirs.has_value());
}

TEST(BoundaryPoint, MatchesThetaStarAndAxisDistance) {
  gen::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto q = rotation_from_quat(rng.quat(0.5));
    const double n1 = rng.uniform(1.05, 5), n2 = n1 + rng.uniform(0.0, 5);
    const auto e = transform(EllipseMatrix::diagonal(n1, n2), q.matrix());
    for (int k = 0; k < 16; ++k) {
      const double phi = rng.uniform(-M_PI, M_PI);
      const auto x = e.boundary_point(phi);
      EXPECT_NEAR(e.quadratic_form(x), 0.0, 1e-10 * x[0] * x[0]);
      const double w = n1 * std::sin(phi) * std::sin(phi) + n2 * std::cos(phi) * std::cos(phi);
      EXPECT_NEAR(hyp_distance(x, e.center()), std::acosh(std::sqrt(w / (w - 1))), 1e-10);
    }
    const auto [a, b] = e.semiaxes();
    EXPECT_NEAR(hyp_distance(e.boundary_point(M_PI / 2), e.center()), std::atanh(1 / std::sqrt(n1)), 1e-10);
    EXPECT_NEAR(hyp_distance(e.boundary_point(0), e.center()), std::atanh(1 / std::sqrt(n2)), 1e-10);
    EXPECT_NEAR(a, std::atanh(1 / std::sqrt(n1)), 1e-10);
    EXPECT_NEAR(b, std::atanh(1 / std::sqrt(n2)), 1e-10);
  }
}

TEST(SemiAxes, Conversions) {
  const double rho = 0.8;
  const auto [n1, n2] = semiaxes_to_eigs(rho, rho);
  const double c = 1.0 / std::tanh(rho);
  EXPECT_NEAR(n1, c * c, 1e-14);
  EXPECT_NEAR(n2, c * c, 1e-14);
  const auto [p, q] = semiaxes_to_eigs(1.3, 0.7);
  const auto [a, b] = eigs_to_semiaxes(p, q);
  EXPECT_NEAR(a, 1.3, 1e-13);
  EXPECT_NEAR(b, 0.7, 1e-13);
  EXPECT_LT(p, q);
  EXPECT_LT(semiaxes_to_eigs(30.0, 1.0).first - 1.0, 1e-20);
  EXPECT_THROW(semiaxes_to_eigs(0.0, 1.0), Error);
  EXPECT_THROW(semiaxes_to_eigs(-1.0, 1.0), Error);
}
