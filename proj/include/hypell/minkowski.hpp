#pragma once

// Minkowski three-space with signature (-,+,+), the hyperboloid model of the
// hyperbolic plane, and its Cayley-Klein (projective disk) chart.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <utility>

#include "hypell/errors.hpp"

namespace hypell {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// A point or direction of Minkowski three-space, coordinates (x0, x1, x2)
/// with x0 the timelike coordinate.
using MinkVector = Vec3;

/// Tolerance for on-hyperboloid and orthogonality checks.
inline constexpr double kTol = 1e-9;

/// The Minkowski metric diag(-1, 1, 1).
inline Mat3 metric() { return Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal(); }

inline double mink_ip(const MinkVector& x, const MinkVector& y) {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double mink_norm2(const MinkVector& x) { return mink_ip(x, x); }

/// On the upper sheet of the unit hyperboloid <x,x> = -1.
inline bool is_point(const MinkVector& x, double tol = kTol) {
  const double scale = std::max(1.0, x[0] * x[0]);
  return x[0] > 0.0 && std::abs(mink_norm2(x) + 1.0) <= tol * scale;
}

inline bool is_spacelike(const MinkVector& x) { return mink_norm2(x) > 0.0; }

/// Vector n with <n, z> = det(x, y, z) for all z; Minkowski-orthogonal to x and y.
inline MinkVector mink_cross(const MinkVector& x, const MinkVector& y) {
  MinkVector c = x.cross(y);
  c[0] = -c[0];
  return c;
}

/// Rescale a timelike vector onto the upper sheet.
inline MinkVector to_point(const MinkVector& x) {
  const double n2 = -mink_norm2(x);
  if (!(n2 > 0.0)) throw Error(Errc::not_on_hyperboloid, "vector is not timelike");
  MinkVector p = x / std::sqrt(n2);
  return p[0] < 0.0 ? MinkVector(-p) : p;
}

inline MinkVector unit_spacelike(const MinkVector& x) {
  const double n2 = mink_norm2(x);
  if (!(n2 > 0.0)) throw Error(Errc::invalid_parameter, "vector is not spacelike");
  return x / std::sqrt(n2);
}

/// Hyperbolic distance arccosh(-<x,y>), evaluated as 2 asinh(|x-y|/2) for accuracy
/// at short range.
inline double hyp_distance(const MinkVector& x, const MinkVector& y) {
  const double c = -mink_ip(x, y);
  const double scale = std::max({1.0, x[0] * x[0], y[0] * y[0]});
  if (c < 1.0 - kTol * scale)
    throw Error(Errc::not_on_hyperboloid, "hyp_distance: -<x,y> < 1, inputs not on the hyperboloid");
  const MinkVector d = x - y;
  const double chord2 = mink_norm2(d);
  if (chord2 <= 0.0) return 0.0;
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

/// Geodesic midpoint: normalized Minkowski sum.
inline MinkVector hyp_midpoint(const MinkVector& c0, const MinkVector& c1) {
  return to_point(c0 + c1);
}

/// Central projection to the plane x0 = 1.
inline Vec2 klein_project(const MinkVector& x) {
  if (!(x[0] > 0.0)) throw Error(Errc::not_on_hyperboloid, "klein_project: x0 must be positive");
  return {x[1] / x[0], x[2] / x[0]};
}

inline MinkVector klein_lift(double u, double v) {
  const double r2 = u * u + v * v;
  if (!(r2 < 1.0))
    throw Error(Errc::out_of_domain, "klein_lift: point on or outside the absolute circle");
  const double s = 1.0 / std::sqrt(1.0 - r2);
  return {s, s * u, s * v};
}

inline MinkVector klein_lift(const Vec2& u) { return klein_lift(u[0], u[1]); }

/// Hyperboloid point at distance `dist` from `base` along the unit tangent `dir`.
inline MinkVector geodesic_point(const MinkVector& base, const MinkVector& dir, double dist) {
  return std::cosh(dist) * base + std::sinh(dist) * dir;
}

/// Hyperbolic rotation of the form printed with the side condition
/// q0^2 + q1^2 - q2^2 - q3^2 = 1. The axis direction is (-q1, q2, q3) and the
/// rotation angle is -2 xi with q0 = cos xi.
class MinkRotation {
 public:
  static MinkRotation from_quat(const std::array<double, 4>& q) {
    const auto [q0, q1, q2, q3] = q;
    const double side = q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3;
    const double scale = std::max(1.0, q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    if (std::abs(side - 1.0) > kTol * scale)
      throw Error(Errc::invalid_parameter, "rotation parameters violate q0^2+q1^2-q2^2-q3^2 = 1");
    Mat3 m;
    m << q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3, 2 * (q0 * q3 + q1 * q2), 2 * (q1 * q3 - q0 * q2),
        2 * (q0 * q3 - q1 * q2), q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3, 2 * (q0 * q1 - q2 * q3),
        2 * (-q0 * q2 - q1 * q3), 2 * (-q0 * q1 - q2 * q3), q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3;
    return MinkRotation(m, q);
  }

  /// Rotation about the hyperbolic origin (1,0,0) through angle zeta.
  static MinkRotation about_origin(double zeta) {
    return from_quat({std::cos(0.5 * zeta), -std::sin(0.5 * zeta), 0.0, 0.0});
  }

  const Mat3& matrix() const noexcept { return m_; }
  const std::array<double, 4>& quat() const noexcept { return q_; }

  /// Inverse of a Minkowski-orthogonal matrix: I m^T I.
  Mat3 inverse() const { return metric() * m_.transpose() * metric(); }

  MinkVector operator*(const MinkVector& x) const { return m_ * x; }

  /// Largest entry of |m^T I m - I|.
  double orthogonality_defect() const {
    return (m_.transpose() * metric() * m_ - metric()).cwiseAbs().maxCoeff();
  }

 private:
  MinkRotation(const Mat3& m, const std::array<double, 4>& q) : m_(m), q_(q) {}
  Mat3 m_;
  std::array<double, 4> q_;
};

inline MinkRotation rotation_from_quat(const std::array<double, 4>& q) {
  return MinkRotation::from_quat(q);
}

/// Idempotent rotation (point reflection) about the hyperboloid point r, with
/// r = (r1, r2, r3) in the timelike-first ordering r1^2 - r2^2 - r3^2 = 1.
inline MinkRotation half_turn_about(const MinkVector& r) {
  if (!is_point(r)) throw Error(Errc::invalid_parameter, "half-turn axis is not a hyperboloid point");
  return MinkRotation::from_quat({0.0, -r[0], r[1], r[2]});
}

/// Pure boost taking the point c to the origin (1,0,0). Symmetric and
/// Minkowski-orthogonal; its inverse is the boost by the opposite velocity.
inline Mat3 boost_to_origin(const MinkVector& c) {
  const double c0 = c[0];
  const Vec2 s(c[1], c[2]);
  Mat3 b;
  b(0, 0) = c0;
  b(0, 1) = b(1, 0) = -s[0];
  b(0, 2) = b(2, 0) = -s[1];
  const Mat2 blk = Mat2::Identity() + s * s.transpose() / (1.0 + c0);
  b.block<2, 2>(1, 1) = blk;
  return b;
}

inline Mat3 boost_from_origin(const MinkVector& c) {
  return metric() * boost_to_origin(c) * metric();
}

/// Exponential map at the origin: the point at distance |v| in direction v.
inline MinkVector exp_origin(const Vec2& v) {
  const double n = v.norm();
  if (n == 0.0) return {1.0, 0.0, 0.0};
  const double s = std::sinh(n) / n;
  return {std::cosh(n), s * v[0], s * v[1]};
}

/// Inverse of exp_origin.
inline Vec2 log_origin(const MinkVector& x) {
  const double d = std::acosh(std::max(1.0, x[0]));
  const Vec2 s(x[1], x[2]);
  const double n = s.norm();
  return n == 0.0 ? Vec2::Zero() : Vec2(s * (d / n));
}

/// Fermi coordinates about the x1-axis line: x = cosh b (cosh a, sinh a, 0) + sinh b (0, 0, 1).
inline Vec2 fermi_coords(const MinkVector& x) { return {std::atanh(x[1] / x[0]), std::asinh(x[2])}; }

inline MinkVector from_fermi(double a, double b) {
  return {std::cosh(a) * std::cosh(b), std::sinh(a) * std::cosh(b), std::sinh(b)};
}

/// Scale the distance along the x1-axis line by `factor`, keeping the
/// distance to that line.
inline MinkVector stretch_along_axis(const MinkVector& x, double factor) {
  const Vec2 f = fermi_coords(x);
  return from_fermi(factor * f[0], f[1]);
}

/// Minkowski-orthonormal frame with first column c and the remaining two
/// spacelike columns obtained by boosting the coordinate axes to c.
inline Mat3 frame_at(const MinkVector& c) { return boost_from_origin(c); }

}  // namespace hypell
