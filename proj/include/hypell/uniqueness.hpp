#pragma once

// The uniqueness inequality H <= 0, its companions h1..h6, the quartic P(t)
// comparing a half-turned ellipse with its concentric partner, and the
// integrands used to bound the Bernstein coefficients of P.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hypell/area.hpp"
#include "hypell/bernstein.hpp"
#include "hypell/conics.hpp"
#include "hypell/deformation.hpp"
#include "hypell/errors.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/quadrature.hpp"
#include "hypell/random.hpp"

namespace hypell {

// ---------------------------------------------------------------- inequalities

inline double H(double nu1, double nu2) {
  return -13.0 * nu1 * nu1 + 5.0 * nu1 * nu2 - 3.0 * nu1 + 7.0 * nu2 + 4.0;
}

inline double h(int j, double a, double b) {
  switch (j) {
    case 1: return b - 5.0 * a + 4.0;
    case 2: return -5.0 * a * a + a * b + a + b + 2.0;
    case 3: return b * b - 5.0 * a * b - 2.0 * a + 4.0 * b + 2.0;
    case 4: return 5.0 * b * b - 13.0 * a * b - 2.0 * a + 6.0 * b + 4.0;
    case 5: return -5.0 * a * a + a * b - a + 3.0 * b + 2.0;
    case 6: return b * b - 5.0 * a * b + 2.0 * b + 2.0;
    default: throw Error(Errc::invalid_parameter, "h: index must be in 1..6");
  }
}

/// The zero curve of H as a graph nu2 = F(nu1); H <= 0 iff nu2 <= F(nu1).
inline double curve_F(double a) { return (13.0 * a * a + 3.0 * a - 4.0) / (5.0 * a + 7.0); }

/// Zero curve of h_j as a graph over nu1 >= 1 (larger root where quadratic).
inline double curve_f(int j, double a) {
  switch (j) {
    case 1: return 5.0 * a - 4.0;
    case 2: return (5.0 * a * a - a - 2.0) / (a + 1.0);
    case 3: {
      const double p = 5.0 * a - 4.0;
      return 0.5 * (p + std::sqrt(p * p + 8.0 * a - 8.0));
    }
    case 4: {
      const double p = 13.0 * a - 6.0;
      return 0.1 * (p + std::sqrt(p * p - 20.0 * (4.0 - 2.0 * a)));
    }
    case 5: return (5.0 * a * a + a - 2.0) / (a + 3.0);
    case 6: {
      const double p = 5.0 * a - 2.0;
      return 0.5 * (p + std::sqrt(p * p - 8.0));
    }
    default: throw Error(Errc::invalid_parameter, "curve_f: index must be in 1..6");
  }
}

struct Lemma9Grid {
  double start = 1.0;
  double step = 0.1;
  int count = 201;  ///< points per axis
};

struct CurveSample {
  double nu1;
  double F;
  std::array<double, 6> f;
};

struct Lemma9Report {
  long points_in_U = 0;
  long H_admissible = 0;
  long violations_a = 0;  ///< H <= 0 but some h_j > 0
  long violations_b = 0;  ///< dominated by a satisfying point but not satisfying
  double worst_margin_a = -INFINITY;  ///< max over H-admissible points of max_j h_j
  bool curves_increasing = true;
  bool gaps_increasing = true;  ///< f_j - F increasing
  std::vector<CurveSample> curves;
};

namespace detail {

inline bool all_inequalities(double a, double b, double tol) {
  if (H(a, b) > tol) return false;
  for (int j = 1; j <= 6; ++j)
    if (::hypell::h(j, a, b) > tol) return false;
  return true;
}

}  // namespace detail

/// Exhaustive check of both halves of the monotonicity lemma on a square grid.
inline Lemma9Report lemma9_scan(const Lemma9Grid& g = {}, int curve_samples = 200, double curve_max = 21.0) {
  if (g.count < 2 || !(g.step > 0.0)) throw Error(Errc::invalid_parameter, "lemma9_scan: bad grid");
  const int n = g.count;
  auto val = [&](int i) { return g.start + g.step * i; };
  auto inU = [&](int i, int j) { return val(i) > 1.0 && val(i) < val(j); };
  // Values are exact small polynomials of grid numbers; allow rounding only.
  auto tol = [&](int i, int j) { return 1e-12 * (1.0 + val(i) * val(i) + val(j) * val(j)); };
  std::vector<char> sat(std::size_t(n) * n, 0);
  Lemma9Report rep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!inU(i, j)) continue;
      ++rep.points_in_U;
      const double a = val(i), b = val(j);
      sat[std::size_t(i) * n + j] = detail::all_inequalities(a, b, tol(i, j));
      if (H(a, b) <= tol(i, j)) {
        ++rep.H_admissible;
        double worst = -INFINITY;
        for (int k = 1; k <= 6; ++k) worst = std::max(worst, h(k, a, b));
        rep.worst_margin_a = std::max(rep.worst_margin_a, worst);
        if (worst > tol(i, j)) ++rep.violations_a;
      }
    }
  // dominated(i, j): some satisfying (i*, j*) with i* <= i and j* >= j.
  std::vector<char> dom(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= 0; --j) {
      const std::size_t k = std::size_t(i) * n + j;
      dom[k] = sat[k] || (i > 0 && dom[k - n]) || (j + 1 < n && dom[k + 1]);
      if (dom[k] && inU(i, j) && !sat[k]) ++rep.violations_b;
    }
  double prevF = -INFINITY;
  std::array<double, 6> prev, prevgap;
  prev.fill(-INFINITY);
  prevgap.fill(-INFINITY);
  for (int s = 0; s <= curve_samples; ++s) {
    const double a = 1.0 + (curve_max - 1.0) * s / curve_samples;
    CurveSample cs{a, curve_F(a), {}};
    if (!(cs.F > prevF)) rep.curves_increasing = false;
    prevF = cs.F;
    for (int j = 0; j < 6; ++j) {
      cs.f[j] = curve_f(j + 1, a);
      if (!(cs.f[j] > prev[j])) rep.curves_increasing = false;
      if (!(cs.f[j] - cs.F > prevgap[j])) rep.gaps_increasing = false;
      prev[j] = cs.f[j];
      prevgap[j] = cs.f[j] - cs.F;
    }
    rep.curves.push_back(cs);
  }
  return rep;
}

// ------------------------------------------------------------ half-turn data

/// Base pair (nu01, nu02), partner pair (nu11, nu12), half-turn center
/// r = (r1, r2, r3) with r1 the timelike coordinate, and pose angle zeta.
struct HalfTurnInstance {
  double nu01 = 0, nu02 = 0, nu11 = 0, nu12 = 0;
  MinkVector r{1, 0, 0};
  double zeta = 0;

  static HalfTurnInstance make(double nu01, double nu02, double nu11, double nu12, double r2, double r3,
                               double zeta = 0.0) {
    HalfTurnInstance in{nu01, nu02, nu11, nu12, {std::sqrt(1.0 + r2 * r2 + r3 * r3), r2, r3}, zeta};
    in.validate();
    return in;
  }

  /// 1 < nu01 <= nu11 <= nu12 <= nu02 with nu01 < nu02.
  void validate() const {
    if (!(1.0 < nu01 && nu01 <= nu11 && nu11 <= nu12 && nu12 <= nu02 && nu01 < nu02))
      throw Error(Errc::invalid_instance, "eigenvalues violate 1 < nu01 <= nu11 <= nu12 <= nu02, nu01 < nu02");
    if (!is_point(r)) throw Error(Errc::invalid_instance, "half-turn center is not a hyperboloid point");
  }

  /// The strict ordering 1 < nu01 < nu11 <= nu12 < nu02.
  bool strict() const { return 1.0 < nu01 && nu01 < nu11 && nu11 <= nu12 && nu12 < nu02; }

  bool h_admissible() const { return H(nu01, nu02) <= 0.0 && H(nu11, nu12) <= 0.0; }

  /// Pose of C1: the rotation through zeta about the origin followed by the half-turn.
  Mat3 pose() const { return half_turn_about(r).matrix() * MinkRotation::about_origin(zeta).matrix(); }
};

using BernsteinQuartic = BernsteinPoly<4>;

/// The five Bernstein coefficients of P with r1^2 = 1 + r2^2 + r3^2 substituted.
inline BernsteinQuartic bernstein_coeffs(const HalfTurnInstance& in, const ABGamma& c) {
  in.validate();
  const double A = c.A, B = c.B, G = c.Gamma;
  const double r2 = in.r[1], r3 = in.r[2];
  const double r1s = 1.0 + r2 * r2 + r3 * r3;
  const double n11 = in.nu11, n12 = in.nu12;
  const double a = (A + B) * r1s * r2 * r2;
  const double b = (A + G) * r1s * r3 * r3;
  const double cc = (B - G) * r2 * r2 * r3 * r3;
  const double L = -(2.0 * A + B + G) * r1s - (B - G) * r2 * r2 + (B - G) * r3 * r3;
  const double cross = r2 * r3 * (n12 - n11) * L;
  BernsteinQuartic p;
  p.coeffs[0] = 4.0 * ((n11 - 1.0) * a + (n12 - 1.0) * b + (n12 - n11) * cc);
  p.coeffs[1] = p.coeffs[0] + 2.0 * cross;
  p.coeffs[2] = (8.0 * (n11 + n12 - 2.0) * (a + b) + 12.0 * cross) / 3.0;
  const double tail = (n12 - 1.0) * a + (n11 - 1.0) * b - (n12 - n11) * cc;
  p.coeffs[3] = 8.0 * tail + 4.0 * cross;
  p.coeffs[4] = 16.0 * tail;
  return p;
}

inline BernsteinQuartic bernstein_coeffs(const HalfTurnInstance& in) {
  in.validate();
  return bernstein_coeffs(in, ab_gamma(in.nu01, in.nu02));
}

/// Magnitude of the terms entering the coefficients; used to scale sign tolerances.
inline double bernstein_scale(const HalfTurnInstance& in, const ABGamma& c) {
  const double r1s = 1.0 + in.r[1] * in.r[1] + in.r[2] * in.r[2];
  return 16.0 * (std::abs(c.A) + std::abs(c.B) + std::abs(c.Gamma)) * in.nu02 * r1s * r1s;
}

/// Example-form of p1, grouped by nu11 and nu12.
inline double p1_grouped(const HalfTurnInstance& in, const ABGamma& c) {
  const double A = c.A, B = c.B, G = c.Gamma, r2 = in.r[1], r3 = in.r[2];
  const double s = 2.0 * A + B + G;
  const double k12 = 4.0 * r2 * r2 * r3 * (A + B) * (r3 - r2) + 4.0 * r3 * r3 * (A + G) * (r3 * r3 - r2 * r3 + 1.0) -
                     2.0 * s * r2 * r3;
  const double k11 = 4.0 * (A + B) * r2 * r2 * (r2 * r2 + r2 * r3 + 1.0) + 4.0 * (A + G) * r2 * r3 * r3 * (r2 + r3) +
                     2.0 * s * r2 * r3;
  return in.nu12 * k12 + in.nu11 * k11 -
         4.0 * (1.0 + r2 * r2 + r3 * r3) * (r2 * r2 * (A + B) + r3 * r3 * (A + G));
}

/// The printed closed form of D1 (half the derivative times N*) at angle zeta.
inline double d1_numerator(const HalfTurnInstance& in, const ABGamma& c, double zeta) {
  const double A = c.A, B = c.B, G = c.Gamma;
  const double r2 = in.r[1], r3 = in.r[2];
  const double r1s = 1.0 + r2 * r2 + r3 * r3;
  const double n11 = in.nu11, n12 = in.nu12;
  const double s = std::sin(zeta), co = std::cos(zeta);
  return 4.0 * r2 * r3 * ((2.0 * A + B + G) * r1s + (B - G) * r2 * r2 - (B - G) * r3 * r3) * (n11 - n12) * s * co +
         (4.0 * (A + B) * r1s * r2 * r2 - 4.0 * (A + G) * r1s * r3 * r3 - 8.0 * (B - G) * r2 * r2 * r3 * r3 + B - G) *
             (n11 - n12) * co * co +
         4.0 * (A + B) * r1s * r2 * r2 * (n12 - 1.0) + 4.0 * (A + G) * r1s * r3 * r3 * (n11 - 1.0) +
         4.0 * (B - G) * r2 * r2 * r3 * r3 * (n11 - n12) + G * n11 + B * n12 - A;
}

/// D1 from the rotation matrices: A X + B Y + Gamma Z for the pose Q = H_r R_zeta.
inline double d1_numerator_geometric(const HalfTurnInstance& in, const ABGamma& c, double zeta) {
  HalfTurnInstance tmp = in;
  tmp.zeta = zeta;
  const Mat3 q = tmp.pose();
  Vec3 x;
  for (int k = 0; k < 3; ++k) x[k] = -q(k, 0) * q(k, 0) + in.nu11 * q(k, 1) * q(k, 1) + in.nu12 * q(k, 2) * q(k, 2);
  return c.A * x[0] + c.B * x[1] + c.Gamma * x[2];
}

/// P(t) in the Bernstein basis.
inline double quartic_P(const HalfTurnInstance& in, double t) { return bernstein_coeffs(in)(t); }

/// P(t) = (D1 - D*1)(1 + t^2)^2 at zeta = 2 arctan t, from the printed D1.
inline double quartic_P_direct(const HalfTurnInstance& in, const ABGamma& c, double t) {
  const double z = 2.0 * std::atan(t);
  const double w = 1.0 + t * t;
  return (d1_numerator(in, c, z) - d_star_numerator(c, in.nu11, in.nu12, z)) * w * w;
}

/// Same from the rotation matrices.
inline double quartic_P_geometric(const HalfTurnInstance& in, const ABGamma& c, double t) {
  const double z = 2.0 * std::atan(t);
  const double w = 1.0 + t * t;
  return (d1_numerator_geometric(in, c, z) - d_star_numerator(c, in.nu11, in.nu12, z)) * w * w;
}

/// The instance with nu01 = nu11 = 1.1, nu02 = nu12 = 90, r2 = 0.9 cos 0.3, r3 = 0.9 sin 0.3.
inline HalfTurnInstance example1_instance() {
  return HalfTurnInstance::make(1.1, 90.0, 1.1, 90.0, 0.9 * std::cos(0.3), 0.9 * std::sin(0.3));
}

// ------------------------------------------------------------- integrands

namespace jterms {

/// (nu02 - nu01) / (nu02 - 1)
inline double k(double a, double b) { return (b - a) / (b - 1.0); }

inline double J1(double a, double b) {
  const auto [K, E] = elliptic_KE(elliptic_modulus(a, b));
  return b * (a - 1.0) * K - a * (5.0 * b - 2.0) * E;
}

inline double J2(double a, double b, double t) {
  return b * (a - 1.0) - a * (5.0 * b - 2.0) * (1.0 - t * t * (b - a) / (a * (b - 1.0)));
}

inline double J3(double a, double b, double t) {
  return -k(a, b) * (2.0 * b - 7.0 * a + 5.0) * t * t + b * (a + 1.0) + a * (1.0 - 5.0 * a) + 2.0;
}

// In J4 and J5 only the t^2 term carries the factor k; the constant part is
// H resp. h5 as the endpoint values require.
inline double J4(double a, double b, double t) {
  return -k(a, b) * 3.0 * (4.0 * b - 5.0 * a + 1.0) * t * t + b * (5.0 * a + 7.0) + a * (-13.0 * a - 3.0) + 4.0;
}

inline double J5(double a, double b, double t) {
  return -k(a, b) * (4.0 * b - 5.0 * a + 1.0) * t * t + b * (a + 3.0) - a * (5.0 * a + 1.0) + 2.0;
}

/// Left-hand sides of the three coefficient bounds in A, B, Gamma.
inline double rhs3(const ABGamma& c, double a, double b) {
  return (5.0 * c.A + 3.0 * c.B + 2.0 * c.Gamma) * a - (c.A + c.B) * b - 2.0 * (2.0 * c.A + c.B + c.Gamma);
}
inline double rhs4(const ABGamma& c, double a, double b) {
  return -(5.0 * c.A + 7.0 * c.B - 2.0 * c.Gamma) * b + (13.0 * c.A + 11.0 * c.B + 2.0 * c.Gamma) * a -
         4.0 * (2.0 * c.A + c.B + c.Gamma);
}
inline double rhs5(const ABGamma& c, double a, double b) {
  return -(c.A + 3.0 * c.B - 2.0 * c.Gamma) * b + 5.0 * (c.A + c.B) * a - 2.0 * (2.0 * c.A + c.B + c.Gamma);
}

/// int_0^1 J(t) / (sqrt(1 - t^2) sqrt(1 - f^2 t^2)) dt via t = sin u.
template <class F>
double weighted_integral(const F& j, double a, double b) {
  const double f = elliptic_modulus(a, b);
  const auto g = [&](double u) {
    const double t = std::sin(u);
    return j(t) / std::sqrt(1.0 - f * f * t * t);
  };
  return quad::integrate(g, 0.0, 0.5 * std::numbers::pi, {1e-15, 1e-14, 4000}).value;
}

}  // namespace jterms

// ------------------------------------------------------------ the lemma check

struct HalfTurnReport {
  bool preconditions_ok = false;
  std::string reason;       ///< why the preconditions failed
  MinkVector r{1, 0, 0};    ///< half-turn center (midpoint of the centers)
  double d_lambda = NAN;    ///< derivative for C_lambda (C0 towards C1)
  double d_star = NAN;      ///< derivative for C*_lambda (C0 towards C*1)
  double d_lambda_closed = NAN;  ///< closed-form value of d_lambda
  double d_lambda_fd = NAN;      ///< finite-difference value of d_lambda
  double area_endpoint = NAN;
  double area_small_lambda = NAN;
  double small_lambda = 1e-3;
  bool verdict = false;     ///< d_lambda < d_star and the small-lambda area is below the endpoint
};

/// Compare the in-between derivative towards C1 with the one towards C1's
/// half-turn image about the midpoint of the two centers.
inline HalfTurnReport half_turn_lemma_check(const EllipseMatrix& c0, const EllipseMatrix& c1,
                                            double small_lambda = 1e-3) {
  HalfTurnReport rep;
  rep.small_lambda = small_lambda;
  const double a0 = area_gaps(c0.gap1(), c0.gap2());
  const double a1 = area_gaps(c1.gap1(), c1.gap2());
  rep.area_endpoint = a0;
  if (std::abs(a0 - a1) > 1e-8 * std::max(1.0, a0)) {
    rep.reason = "areas differ";
    return rep;
  }
  if (hyp_distance(c0.center(), c1.center()) < 1e-12) {
    rep.reason = "concentric ellipses; the fixed-center result applies";
    return rep;
  }
  if (c0.is_circle() && c1.is_circle()) {
    rep.reason = "two congruent circles; use the two-circle shrink construction";
    return rep;
  }
  const double n01 = c0.nu1(), n02 = c0.nu2(), n11 = c1.nu1(), n12 = c1.nu2();
  if (!(n01 < n02 && n01 <= n11 && n12 <= n02)) {
    rep.reason = "eigenvalues violate 1 < nu01 <= nu11 <= nu12 <= nu02";
    return rep;
  }
  if (H(n01, n02) > 0.0 || H(n11, n12) > 0.0) {
    rep.reason = "H > 0 on an eigenvalue pair";
    return rep;
  }
  if (!has_common_interior(c0, c1)) {
    rep.reason = "no common interior; in-between conics are not ellipses";
    return rep;
  }
  rep.preconditions_ok = true;
  rep.r = hyp_midpoint(c0.center(), c1.center());
  const auto cstar = transform(c1, half_turn_about(rep.r).matrix());
  rep.d_lambda = d_area_perturbation(c0, c1);
  rep.d_star = d_area_perturbation(c0, cstar);
  rep.d_lambda_closed = d_area_closed_form(c0, c1);
  // Extrapolating to lambda = -h can leave the ellipse cone for very
  // elongated c0; the cross-check is then simply unavailable.
  try {
    rep.d_lambda_fd = d_area_fd(c0, c1);
  } catch (const Error&) {
  }
  const auto mid = in_between(c0, c1, small_lambda);
  rep.area_small_lambda = area_gaps(mid.gap1(), mid.gap2());
  rep.verdict = rep.d_lambda < rep.d_star && rep.area_small_lambda < rep.area_endpoint;
  return rep;
}

/// C0 = diag(-1, nu01, nu02), C1 = H_r R_zeta diag(-1, nu11, nu12).
inline std::pair<EllipseMatrix, EllipseMatrix> half_turn_ellipses(const HalfTurnInstance& in) {
  in.validate();
  return {EllipseMatrix::diagonal(in.nu01, in.nu02),
          transform(EllipseMatrix::diagonal(in.nu11, in.nu12), in.pose())};
}

// -------------------------------------------------------------- generators

/// nu12 in [nu11, nu02] with area(nu11, nu12) = area(nu01, nu02), or empty.
inline std::optional<double> equal_area_partner(double nu01, double nu02, double nu11) {
  const double target = area(nu01, nu02);
  double lo = nu11, hi = nu02;
  if (area(nu11, lo) < target || area(nu11, hi) > target) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (area(nu11, mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Eigenvalue of the circle with the same area as (nu1, nu2).
inline double equal_area_circle(double nu1, double nu2) {
  const double a = area(nu1, nu2);
  // 2 pi (cosh rho - 1) = a and nu = coth^2 rho.
  const double rho = std::acosh(1.0 + a / (2.0 * std::numbers::pi));
  return axis_to_eig(rho);
}

struct InstanceOptions {
  double nu01_max = 50.0;
  double r_max = 3.0;
  double r_min = 0.0;
  bool equal_area = false;
  bool overlapping = false;  ///< reject instances whose ellipses share no interior
};

/// Random instance with H(nu01, nu02) <= 0, 1 < nu01 < nu11 <= nu12 < nu02,
/// (r2, r3) uniform in an annulus and zeta uniform on [0, pi/2]. With
/// equal_area, nu12 is solved so that both ellipses have the same area.
inline HalfTurnInstance random_instance(Rng& rng, const InstanceOptions& o = {}) {
  for (;;) {
    const double nu01 = 1.0 + rng.log_uniform(1e-3, o.nu01_max - 1.0);
    const double fmax = curve_F(nu01);
    const double nu02 = nu01 + (fmax - nu01) * rng.uniform(1e-3, 1.0);
    double nu11, nu12;
    if (o.equal_area) {
      const double circ = equal_area_circle(nu01, nu02);
      nu11 = nu01 + (circ - nu01) * rng.uniform(0.02, 0.98);
      const auto p = equal_area_partner(nu01, nu02, nu11);
      if (!p) continue;
      nu12 = *p;
    } else {
      nu11 = nu01 + (nu02 - nu01) * rng.uniform(1e-3, 1.0 - 1e-3);
      nu12 = nu11 + (nu02 - nu11) * rng.uniform(0.0, 1.0 - 1e-3);
    }
    if (!(nu01 < nu11 && nu11 <= nu12 && nu12 < nu02)) continue;
    const double rad = std::sqrt(rng.uniform(o.r_min * o.r_min / (o.r_max * o.r_max), 1.0)) * o.r_max;
    const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double zeta = rng.uniform(0.0, 0.5 * std::numbers::pi);
    auto in = HalfTurnInstance::make(nu01, nu02, nu11, nu12, rad * std::cos(th), rad * std::sin(th), zeta);
    if (o.overlapping) {
      const auto [c0, c1] = half_turn_ellipses(in);
      if (!has_common_interior(c0, c1)) continue;
    }
    return in;
  }
}

}  // namespace hypell
