#pragma once

// Area of a hyperbolic ellipse from its Minkowski eigenvalues. In polar
// coordinates about the center the boundary sits at cosh^2(theta) = w / (w - 1),
// w = nu1 sin^2(phi) + nu2 cos^2(phi), so the area is the integral of
// cosh(theta) - 1 over a full turn. Everything here is written in terms of
// the gap p = w - 1, which stays accurate for elongated ellipses.

#include <Eigen/Core>

#include <cmath>
#include <numbers>

#include "hypell/errors.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/quadrature.hpp"

namespace hypell {

/// Minkowski eigenvalues of a (not necessarily normalized) ellipse.
struct EigTriple {
  double nu0 = 1.0, nu1 = 2.0, nu2 = 2.0;
};

namespace kernel {

/// sqrt(1 + 1/p) - 1 without cancellation.
inline double g(double p) {
  const double sp = std::sqrt(p);
  return 1.0 / (sp * (std::sqrt(1.0 + p) + sp));
}

inline double dg(double p) { return -0.5 / (std::sqrt(1.0 + p) * p * std::sqrt(p)); }

inline double d2g(double p) {
  const double q = 1.0 + p;
  return 0.25 * (4.0 * p + 3.0) / (q * std::sqrt(q) * p * p * std::sqrt(p));
}

}  // namespace kernel

inline quad::Options area_quad_options() { return {1e-15, 1e-14, 4000}; }

/// Area for normalized eigenvalues given through their gaps nu_i - 1.
inline double area_gaps(double gap1, double gap2) {
  if (!(gap1 > 0.0 && gap2 > 0.0)) throw Error(Errc::out_of_domain, "area: eigenvalue gaps must be positive");
  if (std::abs(gap2 - gap1) < 1e-12 * (1.0 + std::max(gap1, gap2)))
    return 2.0 * std::numbers::pi * kernel::g(0.5 * (gap1 + gap2));
  const auto f = [=](double phi) {
    const double s = std::sin(phi), c = std::cos(phi);
    return kernel::g(gap1 * s * s + gap2 * c * c);
  };
  return 4.0 * quad::integrate(f, 0.0, 0.5 * std::numbers::pi, area_quad_options()).value;
}

inline double area(const EigTriple& e) {
  if (!(e.nu0 > 0.0)) throw Error(Errc::out_of_domain, "area: nu0 must be positive");
  const double g1 = (e.nu1 - e.nu0) / e.nu0;
  const double g2 = (e.nu2 - e.nu0) / e.nu0;
  if (!(g1 > 0.0 && g2 > 0.0)) throw Error(Errc::out_of_domain, "area: need nu1, nu2 > nu0");
  return area_gaps(g1, g2);
}

inline double area(double nu1, double nu2) { return area(EigTriple{1.0, nu1, nu2}); }

/// Area of the ellipse with the given major and minor semi-axis lengths.
inline double area_semiaxes(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw Error(Errc::invalid_parameter, "semi-axis length must be positive");
  const double sa = std::sinh(a), sb = std::sinh(b);
  return area_gaps(1.0 / (sa * sa), 1.0 / (sb * sb));
}

inline double circle_area(double radius) {
  // 2 pi (cosh r - 1) = 4 pi sinh^2(r/2)
  const double s = std::sinh(0.5 * radius);
  return 4.0 * std::numbers::pi * s * s;
}

/// The raw integral of sqrt(w / (w - nu0)) over [-pi, pi] minus 2 pi, with the
/// eigenvalues taken as given. Slower and less accurate than area(); kept as an
/// independent route.
inline double area_unnormalized(const EigTriple& e) {
  const auto f = [=](double phi) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double w = e.nu1 * s * s + e.nu2 * c * c;
    return std::sqrt(w / (w - e.nu0));
  };
  return quad::integrate(f, -std::numbers::pi, std::numbers::pi, {1e-14, 1e-13, 4000}).value -
         2.0 * std::numbers::pi;
}

/// Second-derivative kernel (4w - 1) / (w^{3/2} (w - 1)^{5/2}).
inline double hessian_kernel(double nu1, double nu2, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double w = nu1 * s * s + nu2 * c * c;
  return (4.0 * w - 1.0) / (std::pow(w, 1.5) * std::pow(w - 1.0, 2.5));
}

/// (d area / d nu1, d area / d nu2) at nu0 = 1.
inline Vec2 area_gradient(double nu1, double nu2) {
  if (!(nu1 > 1.0 && nu2 > 1.0)) throw Error(Errc::out_of_domain, "area_gradient: need nu1, nu2 > 1");
  const double g1 = nu1 - 1.0, g2 = nu2 - 1.0;
  const auto f = [=](double phi) {
    const double s2 = std::sin(phi) * std::sin(phi), c2 = std::cos(phi) * std::cos(phi);
    const double d = kernel::dg(g1 * s2 + g2 * c2);
    return Vec2(d * s2, d * c2);
  };
  return 4.0 * quad::integrate(f, 0.0, 0.5 * std::numbers::pi, area_quad_options()).value;
}

/// Hessian in (nu1, nu2) at nu0 = 1; entries are (1/4) int J sin^4, sin^2 cos^2, cos^4.
inline Mat2 area_hessian(double nu1, double nu2) {
  if (!(nu1 > 1.0 && nu2 > 1.0)) throw Error(Errc::out_of_domain, "area_hessian: need nu1, nu2 > 1");
  const double g1 = nu1 - 1.0, g2 = nu2 - 1.0;
  const auto f = [=](double phi) {
    const double s2 = std::sin(phi) * std::sin(phi), c2 = std::cos(phi) * std::cos(phi);
    const double d = kernel::d2g(g1 * s2 + g2 * c2);
    return Eigen::Vector3d(d * s2 * s2, d * s2 * c2, d * c2 * c2);
  };
  const Eigen::Vector3d v = 4.0 * quad::integrate(f, 0.0, 0.5 * std::numbers::pi, area_quad_options()).value;
  Mat2 h;
  h << v[0], v[1], v[1], v[2];
  return h;
}

/// Area of the ellipse centered at the origin whose interior is
/// { y : y^T P y < 1 } in the coordinates y = sinh(theta) (cos psi, sin psi),
/// together with derivatives in z = (P11, P12, P22).
struct SpatialArea {
  double value = 0.0;
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
  Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
};

inline SpatialArea spatial_area(const Eigen::Vector3d& z, bool with_hessian = true) {
  const double a = z[0], b = z[1], c = z[2];
  SpatialArea out;
  // pi-periodic integrand: integrate over half a turn and double.
  if (with_hessian) {
    using V = Eigen::Matrix<double, 10, 1>;
    const auto f = [=](double psi) {
      const double cs = std::cos(psi), sn = std::sin(psi);
      const Eigen::Vector3d v(cs * cs, 2.0 * cs * sn, sn * sn);
      const double p = a * v[0] + b * v[1] + c * v[2];
      V r;
      r[0] = kernel::g(p);
      r.segment<3>(1) = kernel::dg(p) * v;
      const double h = kernel::d2g(p);
      r[4] = h * v[0] * v[0];
      r[5] = h * v[0] * v[1];
      r[6] = h * v[0] * v[2];
      r[7] = h * v[1] * v[1];
      r[8] = h * v[1] * v[2];
      r[9] = h * v[2] * v[2];
      return r;
    };
    const V r = 2.0 * quad::integrate(f, 0.0, std::numbers::pi, {1e-15, 1e-13, 4000}).value;
    out.value = r[0];
    out.grad = r.segment<3>(1);
    out.hess << r[4], r[5], r[6], r[5], r[7], r[8], r[6], r[8], r[9];
  } else {
    const auto f = [=](double psi) {
      const double cs = std::cos(psi), sn = std::sin(psi);
      return kernel::g(a * cs * cs + 2.0 * b * cs * sn + c * sn * sn);
    };
    out.value = 2.0 * quad::integrate(f, 0.0, std::numbers::pi, area_quad_options()).value;
  }
  return out;
}

}  // namespace hypell
