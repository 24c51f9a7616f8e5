#pragma once

// In-between ellipses (1 - lambda) M0 + lambda M1 and the derivative of their
// area at lambda = 0. Three routes are offered: the elliptic-integral closed
// form, the phi-quadrature it comes from, and first-order eigenvalue
// perturbation in the frame of M0.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypell/area.hpp"
#include "hypell/conics.hpp"
#include "hypell/elliptic.hpp"
#include "hypell/errors.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/quadrature.hpp"
#include "hypell/random.hpp"

namespace hypell {

namespace detail {

inline EllipseMatrix combination(const EllipseMatrix& m0, const EllipseMatrix& m1, double lambda) {
  const Mat3 m = (1.0 - lambda) * m0.matrix() + lambda * m1.matrix();
  try {
    return normalize(m);
  } catch (const Error& e) {
    throw Error(Errc::degenerate_combination, e.what());
  }
}

// Frame [c e1 e2] of an ellipse; T^T M T is diagonal for its own matrix.
inline Mat3 frame_of(const EllipseMatrix& e) {
  Mat3 t;
  t.col(0) = e.center();
  t.col(1) = e.major_axis();
  t.col(2) = e.minor_axis();
  return t;
}

}  // namespace detail

/// Whether the two interiors meet: one center lies inside the other ellipse,
/// or the boundary of m0 crosses m1 (checked on a fine parameter sweep).
inline bool has_common_interior(const EllipseMatrix& m0, const EllipseMatrix& m1, int samples = 1024) {
  if (m1.quadratic_form(m0.center()) < 0.0 || m0.quadratic_form(m1.center()) < 0.0) return true;
  for (int i = 0; i < samples; ++i)
    if (m1.quadratic_form(m0.boundary_point(2.0 * std::numbers::pi * i / samples)) < 0.0) return true;
  return false;
}

/// The normalized in-between ellipse for lambda in [0, 1].
inline EllipseMatrix in_between(const EllipseMatrix& m0, const EllipseMatrix& m1, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(Errc::invalid_parameter, "lambda must lie in [0, 1]");
  if (lambda == 0.0) return m0;
  if (lambda == 1.0) return m1;
  return detail::combination(m0, m1, lambda);
}

/// Coefficients of the closed-form derivative for the base pair nu01 < nu02.
struct ABGamma {
  double A, B, Gamma;
  double f;     ///< elliptic modulus
  double Ebar;  ///< E(f)
  double Kbar;  ///< K(f)
};

inline double elliptic_modulus(double nu01, double nu02) {
  return std::sqrt((nu02 - nu01) / ((nu02 - 1.0) * nu01));
}

inline ABGamma ab_gamma(double nu01, double nu02) {
  if (!(nu01 > 1.0 && nu01 < nu02)) throw Error(Errc::out_of_domain, "ab_gamma: need 1 < nu01 < nu02");
  const double f = elliptic_modulus(nu01, nu02);
  const auto [K, E] = elliptic_KE(f);
  ABGamma r;
  r.f = f;
  r.Ebar = E;
  r.Kbar = K;
  r.A = -nu01 * (nu02 - nu01) * E;
  r.B = nu02 * (nu01 - 1.0) * K - nu01 * (nu02 - 1.0) * E;
  r.Gamma = nu01 * (nu01 - 1.0) * (E - K);
  return r;
}

/// sqrt((nu02 - 1) nu01) (nu02 - nu01) (nu01 - 1)
inline double n_star(double nu01, double nu02) {
  return std::sqrt((nu02 - 1.0) * nu01) * (nu02 - nu01) * (nu01 - 1.0);
}

/// C0 = diag(-1, nu01, nu02) and C1 = Q applied to diag(-1, nu11, nu12).
class EllipsePair {
 public:
  /// With `strict`, requires 1 < nu01 < nu11 <= nu12 < nu02; otherwise only
  /// 1 < nu01 < nu02 and 1 < nu11 <= nu12.
  EllipsePair(double nu01, double nu02, double nu11, double nu12, const MinkRotation& q, bool strict = false)
      : nu01_(nu01), nu02_(nu02), nu11_(nu11), nu12_(nu12), q_(q),
        m0_(EllipseMatrix::diagonal(check(nu01, nu02, nu11, nu12, strict), nu02)),
        m1_(transform(EllipseMatrix::diagonal(nu11, nu12), q.matrix())) {}

  const EllipseMatrix& m0() const noexcept { return m0_; }
  const EllipseMatrix& m1() const noexcept { return m1_; }
  const MinkRotation& q() const noexcept { return q_; }
  double nu01() const noexcept { return nu01_; }
  double nu02() const noexcept { return nu02_; }
  double nu11() const noexcept { return nu11_; }
  double nu12() const noexcept { return nu12_; }

  /// Diagonal of M1 written through the rows of Q:
  /// (-q_k0^2 + nu11 q_k1^2 + nu12 q_k2^2) for k = 0, 1, 2.
  Vec3 xyz() const {
    const Mat3& m = q_.matrix();
    Vec3 r;
    for (int k = 0; k < 3; ++k) r[k] = -m(k, 0) * m(k, 0) + nu11_ * m(k, 1) * m(k, 1) + nu12_ * m(k, 2) * m(k, 2);
    return r;
  }

 private:
  static double check(double nu01, double nu02, double nu11, double nu12, bool strict) {
    if (!(nu01 > 1.0 && nu01 < nu02 && nu11 > 1.0 && nu11 <= nu12))
      throw Error(Errc::invalid_instance, "eigenvalues must satisfy 1 < nu01 < nu02 and 1 < nu11 <= nu12");
    if (strict && !(nu01 < nu11 && nu12 < nu02))
      throw Error(Errc::invalid_instance, "eigenvalues violate 1 < nu01 < nu11 <= nu12 < nu02");
    return nu01;
  }

  double nu01_, nu02_, nu11_, nu12_;
  MinkRotation q_;
  EllipseMatrix m0_, m1_;
};

/// Closed form 2 / N* (A X + B Y + Gamma Z).
inline double d_area_at_zero(const EllipsePair& p) {
  const auto c = ab_gamma(p.nu01(), p.nu02());
  const Vec3 x = p.xyz();
  return 2.0 / n_star(p.nu01(), p.nu02()) * (c.A * x[0] + c.B * x[1] + c.Gamma * x[2]);
}

/// Closed form for arbitrary normalized, non-circular m0: X, Y, Z are read
/// off m1 expressed in the frame of m0.
inline double d_area_closed_form(const EllipseMatrix& m0, const EllipseMatrix& m1) {
  const Mat3 t = detail::frame_of(m0);
  const Mat3 m = t.transpose() * m1.matrix() * t;
  const auto c = ab_gamma(m0.nu1(), m0.nu2());
  return 2.0 / n_star(m0.nu1(), m0.nu2()) * (c.A * m(0, 0) + c.B * m(1, 1) + c.Gamma * m(2, 2));
}

/// -1/2 int D / N over a full turn, with
/// D = sin^2(phi) (nu01 X + Y) + cos^2(phi) (nu02 X + Z).
inline double d_area_quadrature(const EllipsePair& p) {
  const Vec3 x = p.xyz();
  const double a = p.nu01(), b = p.nu02();
  const auto f = [=](double phi) {
    const double s2 = std::sin(phi) * std::sin(phi), c2 = std::cos(phi) * std::cos(phi);
    const double w = a * s2 + b * c2;
    const double d = s2 * (a * x[0] + x[1]) + c2 * (b * x[0] + x[2]);
    return d / (std::pow(w - 1.0, 1.5) * std::sqrt(w));
  };
  // Even and pi-periodic: a quarter turn suffices.
  return -2.0 * quad::integrate(f, 0.0, 0.5 * std::numbers::pi, {1e-15, 1e-14, 4000}).value;
}

/// Derivative by first-order eigenvalue perturbation; m0 and m1 may be any
/// normalized ellipses. Works for circular m0 as well.
inline double d_area_perturbation(const EllipseMatrix& m0, const EllipseMatrix& m1) {
  const Mat3 t = detail::frame_of(m0);
  const Mat3 m = t.transpose() * m1.matrix() * t;
  const double n1 = m0.nu1(), n2 = m0.nu2();
  const double d0 = -(m(0, 0) + 1.0);
  const double d1 = m(1, 1) - n1;
  const double d2 = m(2, 2) - n2;
  const Vec2 g = area_gradient(n1, n2);
  // area is homogeneous of degree 0 in (nu0, nu1, nu2).
  const double g0 = -(n1 * g[0] + n2 * g[1]);
  return g0 * d0 + g[0] * d1 + g[1] * d2;
}

/// Central difference of lambda -> area(in-between) at lambda = 0.
inline double d_area_fd(const EllipseMatrix& m0, const EllipseMatrix& m1, double h = 1e-5) {
  const auto ap = detail::combination(m0, m1, h);
  const auto am = detail::combination(m0, m1, -h);
  return (area_gaps(ap.gap1(), ap.gap2()) - area_gaps(am.gap1(), am.gap2())) / (2.0 * h);
}

/// Random pair in the ordering 1 < nu01 < nu11 <= nu12 < nu02 with C1 moved
/// by a rotation whose translation components are bounded by `spread`.
/// Central differences with step 1e-5 lose accuracy as quadratically as the
/// displacement grows, so the FD oracle is only meaningful for moderate poses.
inline EllipsePair random_admissible_pair(Rng& rng, double spread = 0.3) {
  const double n01 = 1.0 + rng.log_uniform(0.05, 8.0);
  const double n02 = n01 * std::exp(rng.uniform(0.05, 2.0));
  const double u = rng.uniform(0.02, 0.98), v = rng.uniform(0.02, 0.98);
  const double n11 = n01 + (n02 - n01) * std::min(u, v);
  const double n12 = n01 + (n02 - n01) * std::max(u, v);
  const double q2 = rng.uniform(-spread, spread), q3 = rng.uniform(-spread, spread);
  const double xi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double s = std::sqrt(1.0 + q2 * q2 + q3 * q3);
  return EllipsePair(n01, n02, n11, n12, rotation_from_quat({s * std::cos(xi), s * std::sin(xi), q2, q3}), true);
}

/// D*_1 = -A + (B cos^2 z + Gamma sin^2 z) nu11 + (B sin^2 z + Gamma cos^2 z) nu12.
inline double d_star_numerator(const ABGamma& c, double nu11, double nu12, double zeta) {
  const double cz = std::cos(zeta), sz = std::sin(zeta);
  const double c2 = cz * cz, s2 = sz * sz;
  return -c.A + (c.B * c2 + c.Gamma * s2) * nu11 + (c.B * s2 + c.Gamma * c2) * nu12;
}

/// Derivative for the concentric partner rotated about the origin through zeta.
inline double d_area_star(double nu01, double nu02, double nu11, double nu12, double zeta) {
  const auto c = ab_gamma(nu01, nu02);
  return 2.0 * d_star_numerator(c, nu11, nu12, zeta) / n_star(nu01, nu02);
}

}  // namespace hypell
