#pragma once

// Hyperbolic ellipses as symmetric 3x3 matrices M: the conic is x^T M x = 0 on
// the hyperboloid, interior points have x^T M x < 0 once M is normalized to
// Minkowski eigenvalues (1, nu1, nu2) with 1 < nu1 <= nu2.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "hypell/errors.hpp"
#include "hypell/minkowski.hpp"

namespace hypell {

/// Solution of the pencil M x = nu diag(-1,1,1) x.
struct MinkEigen {
  std::array<double, 3> values;      ///< ascending
  std::array<MinkVector, 3> vectors;  ///< vectors[i] belongs to values[i]
  int timelike = 0;                   ///< index of the timelike eigenvector
};

namespace detail {

inline double cubic_eval(double c2, double c1, double c0, double x) {
  return ((x - c2) * x + c1) * x - c0;
}

inline double cubic_deriv(double c2, double c1, double x) { return (3.0 * x - 2.0 * c2) * x + c1; }

// Real roots of x^3 - c2 x^2 + c1 x - c0 when all three are real.
inline std::optional<std::array<double, 3>> real_cubic_roots(double c2, double c1, double c0) {
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
  const double scale = std::max({std::abs(c2), std::sqrt(std::abs(c1)), std::cbrt(std::abs(c0)), 1e-300});
  if (p >= 0.0) {
    // Only a (near) triple root can be real here.
    if (std::abs(p) <= 1e-12 * scale * scale && std::abs(q) <= 1e-12 * scale * scale * scale) {
      return std::array<double, 3>{shift, shift, shift};
    }
    return std::nullopt;
  }
  const double disc = 4.0 * p * p * p + 27.0 * q * q;  // > 0 means a complex pair
  if (disc > 1e-10 * (4.0 * std::abs(p * p * p) + 27.0 * q * q)) return std::nullopt;
  const double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = 3.0 * q / (p * m);
  arg = std::clamp(arg, -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  std::array<double, 3> r;
  for (int k = 0; k < 3; ++k) r[k] = shift + m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
  std::sort(r.begin(), r.end());
  return r;
}

// Null vector of the symmetric 3x3 matrix b via the largest cross product of its rows.
inline MinkVector null_vector(const Mat3& b, double* reliability) {
  const Vec3 r0 = b.row(0), r1 = b.row(1), r2 = b.row(2);
  const Vec3 c[3] = {r0.cross(r1), r0.cross(r2), r1.cross(r2)};
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (c[i].squaredNorm() > c[best].squaredNorm()) best = i;
  const double bn = b.squaredNorm();
  *reliability = bn > 0.0 ? c[best].norm() / bn : 0.0;
  const double n = c[best].norm();
  return n > 0.0 ? MinkVector(c[best] / n) : MinkVector(0, 0, 0);
}

// Symmetric 2x2 eigen-decomposition, ascending, with orthonormal columns.
inline std::pair<Vec2, Mat2> sym2_eigen(const Mat2& s) {
  const double a = s(0, 0), b = s(0, 1), d = s(1, 1);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double rad = std::hypot(half, b);
  Vec2 vals(mean - rad, mean + rad);
  Mat2 vecs;
  if (rad == 0.0) {
    vecs.setIdentity();
  } else {
    // Angle of the eigenvector belonging to the larger eigenvalue.
    const double ang = 0.5 * std::atan2(b, half);
    const Vec2 big(std::cos(ang), std::sin(ang));
    vecs.col(1) = big;
    vecs.col(0) = Vec2(-big[1], big[0]);
  }
  return {vals, vecs};
}

}  // namespace detail

/// Minkowski eigenvalues and eigenvectors of a symmetric matrix. The timelike
/// eigenvector is located from the cubic's roots; the two spacelike ones come
/// from the symmetric restriction of m to its Minkowski-orthogonal complement.
inline MinkEigen mink_eigs(const Mat3& m_in) {
  const Mat3 I = metric();
  const Mat3 sym = 0.5 * (m_in + m_in.transpose());
  if (!sym.allFinite()) throw Error(Errc::not_an_ellipse, "non-finite matrix");
  // Shift by the mean eigenvalue so that clustered eigenvalues (elongated or
  // tiny ellipses) are resolved relative to their spread, then rescale.
  const double shift = (I * sym).trace() / 3.0;
  const Mat3 shifted = sym - shift * I;
  const double scale = shifted.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw Error(Errc::not_an_ellipse, "pencil is a multiple of the metric");
  const Mat3 m = shifted / scale;
  const Mat3 a = I * m;
  const double c2 = a.trace();
  const double c1 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) +
                    a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  const double c0 = a.determinant();
  const auto roots = detail::real_cubic_roots(c2, c1, c0);
  if (!roots) throw Error(Errc::not_an_ellipse, "Minkowski eigenvalues are complex");

  int t_idx = -1;
  double best_sign = 0.0;
  MinkVector v0 = MinkVector::Zero();
  double nu0 = 0.0;
  for (int k = 0; k < 3; ++k) {
    double x = (*roots)[k];
    for (int it = 0; it < 3; ++it) {
      const double d = detail::cubic_deriv(c2, c1, x);
      if (std::abs(d) < 1e-8) break;
      const double step = detail::cubic_eval(c2, c1, c0, x) / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    double rel = 0.0;
    const MinkVector v = detail::null_vector(m - x * I, &rel);
    if (rel < 1e-7) continue;
    const double s = mink_norm2(v);
    if (s < best_sign - 0.0 && s < -1e-9) {
      best_sign = s;
      t_idx = k;
      v0 = v;
      nu0 = x;
    }
  }
  if (t_idx < 0) throw Error(Errc::not_an_ellipse, "pencil has no timelike eigenvector");

  v0 = to_point(v0);
  nu0 = -v0.dot(m * v0);  // Rayleigh quotient with <v0,v0> = -1
  // Spacelike orthonormal complement of v0.
  MinkVector u(0.0, 1.0, 0.0);
  if (std::abs(mink_ip(u, v0)) > std::abs(mink_ip(MinkVector(0, 0, 1), v0))) u = MinkVector(0, 0, 1);
  const MinkVector e1 = unit_spacelike(u + mink_ip(u, v0) * v0);
  const MinkVector e2 = unit_spacelike(mink_cross(v0, e1));
  Mat2 s;
  s(0, 0) = e1.dot(m * e1);
  s(0, 1) = s(1, 0) = e1.dot(m * e2);
  s(1, 1) = e2.dot(m * e2);
  const auto [vals, vecs] = detail::sym2_eigen(s);

  std::array<std::pair<double, MinkVector>, 3> all = {
      std::pair{shift + nu0 * scale, v0},
      std::pair{shift + vals[0] * scale, MinkVector(vecs(0, 0) * e1 + vecs(1, 0) * e2)},
      std::pair{shift + vals[1] * scale, MinkVector(vecs(0, 1) * e1 + vecs(1, 1) * e2)}};
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return all[i].first < all[j].first; });
  MinkEigen out;
  for (int i = 0; i < 3; ++i) {
    out.values[i] = all[order[i]].first;
    out.vectors[i] = all[order[i]].second;
    if (order[i] == 0) out.timelike = i;
  }
  return out;
}

/// Semi-axis lengths to normalized eigenvalues: nu = coth^2(axis).
inline double axis_to_eig(double a) {
  if (!(a > 0.0)) throw Error(Errc::invalid_parameter, "semi-axis length must be positive");
  const double t = std::tanh(a);
  return 1.0 / (t * t);
}

/// nu - 1 = 1 / sinh^2(axis), kept separately for elongated ellipses.
inline double axis_to_gap(double a) {
  if (!(a > 0.0)) throw Error(Errc::invalid_parameter, "semi-axis length must be positive");
  const double s = std::sinh(a);
  return 1.0 / (s * s);
}

inline double eig_to_axis(double nu) {
  if (!(nu > 1.0)) throw Error(Errc::invalid_parameter, "eigenvalue must exceed 1");
  return std::atanh(1.0 / std::sqrt(nu));
}

inline double gap_to_axis(double gap) {
  if (!(gap > 0.0)) throw Error(Errc::invalid_parameter, "eigenvalue gap must be positive");
  return std::asinh(1.0 / std::sqrt(gap));
}

/// (nu1, nu2) for semi-axes a, b; the larger axis maps to the smaller eigenvalue.
inline std::pair<double, double> semiaxes_to_eigs(double a, double b) {
  const double nu_a = axis_to_eig(a), nu_b = axis_to_eig(b);
  return {std::min(nu_a, nu_b), std::max(nu_a, nu_b)};
}

/// (major, minor) semi-axes for 1 < nu1 <= nu2.
inline std::pair<double, double> eigs_to_semiaxes(double nu1, double nu2) {
  if (!(nu1 > 1.0 && nu2 >= nu1)) throw Error(Errc::invalid_parameter, "need 1 < nu1 <= nu2");
  return {eig_to_axis(nu1), eig_to_axis(nu2)};
}

struct CenterAxes {
  MinkVector center;
  std::optional<std::array<MinkVector, 2>> axis_dirs;  ///< major (nu1) then minor (nu2); empty for circles
  bool is_circle = false;
};

enum class Containment { inside, boundary, outside };

/// A normalized hyperbolic ellipse. Besides the matrix it keeps the frame
/// (center, major axis, minor axis) and the eigenvalue gaps nu_i - 1.
class EllipseMatrix {
 public:
  /// Ellipse with the given center, axis directions and eigenvalue gaps
  /// (gap_major <= gap_minor): m = I T diag(-1, 1+g1, 1+g2) T^T I, T = [c e1 e2].
  static EllipseMatrix from_frame(const MinkVector& center, const MinkVector& e_major,
                                  const MinkVector& e_minor, double gap_major, double gap_minor) {
    if (!(gap_major > 0.0 && gap_minor > 0.0))
      throw Error(Errc::not_an_ellipse, "eigenvalue gaps must be positive");
    if (gap_major > gap_minor) return from_frame(center, e_minor, e_major, gap_minor, gap_major);
    Mat3 t;
    t.col(0) = center;
    t.col(1) = e_major;
    t.col(2) = e_minor;
    const Mat3 I = metric();
    const Mat3 d = Vec3(-1.0, 1.0 + gap_major, 1.0 + gap_minor).asDiagonal();
    Mat3 m = I * t * d * t.transpose() * I;
    m = 0.5 * (m + m.transpose());
    return EllipseMatrix(m, center, e_major, e_minor, gap_major, gap_minor);
  }

  static EllipseMatrix diagonal(double nu1, double nu2) {
    if (!(nu1 > 1.0 && nu2 > 1.0)) throw Error(Errc::not_an_ellipse, "need nu1, nu2 > 1");
    return from_frame({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, nu1 - 1.0, nu2 - 1.0);
  }

  static EllipseMatrix circle(const MinkVector& center, double radius) {
    const Mat3 f = frame_at(center);
    const double g = axis_to_gap(radius);
    return from_frame(center, f.col(1), f.col(2), g, g);
  }

  const Mat3& matrix() const noexcept { return m_; }
  std::array<double, 3> eigs() const { return {1.0, 1.0 + gap1_, 1.0 + gap2_}; }
  double nu1() const noexcept { return 1.0 + gap1_; }
  double nu2() const noexcept { return 1.0 + gap2_; }
  double gap1() const noexcept { return gap1_; }
  double gap2() const noexcept { return gap2_; }
  const MinkVector& center() const noexcept { return center_; }
  const MinkVector& major_axis() const noexcept { return e1_; }
  const MinkVector& minor_axis() const noexcept { return e2_; }
  bool is_circle() const noexcept { return gap2_ - gap1_ < 1e-9 * (1.0 + gap2_); }
  std::pair<double, double> semiaxes() const { return {gap_to_axis(gap1_), gap_to_axis(gap2_)}; }

  double quadratic_form(const MinkVector& x) const { return x.dot(m_ * x); }

  /// Boundary point at parameter phi, measured from the minor axis towards
  /// the major axis (the parametrization with x1 = sinh(theta) sin(phi)).
  MinkVector boundary_point(double phi) const {
    const double s = std::sin(phi), c = std::cos(phi);
    const double p = gap1_ * s * s + gap2_ * c * c;
    const double sh = 1.0 / std::sqrt(p);  // sinh(theta*)
    const double ch = std::sqrt(1.0 + 1.0 / p);
    return ch * center_ + sh * (s * e1_ + c * e2_);
  }

 private:
  EllipseMatrix(const Mat3& m, const MinkVector& c, const MinkVector& e1, const MinkVector& e2, double g1,
                double g2)
      : m_(m), center_(c), e1_(e1), e2_(e2), gap1_(g1), gap2_(g2) {}

  Mat3 m_;
  MinkVector center_, e1_, e2_;
  double gap1_, gap2_;
};

/// Scale m by the reciprocal of its timelike Minkowski eigenvalue. Rejects
/// matrices whose scaled spacelike eigenvalues do not exceed 1.
inline EllipseMatrix normalize(const Mat3& m) {
  const MinkEigen eig = mink_eigs(m);
  const double nu0 = eig.values[eig.timelike];
  if (nu0 == 0.0) throw Error(Errc::not_an_ellipse, "vanishing timelike eigenvalue");
  std::array<int, 2> sp{};
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != eig.timelike) sp[k++] = i;
  const MinkVector c = to_point(eig.vectors[eig.timelike]);
  // Gaps (nu_i - nu0) / nu0 from the restricted block shifted by nu0, which
  // keeps precision when nu_i is close to nu0.
  const Mat3 ms = m / nu0;
  MinkVector e1 = unit_spacelike(eig.vectors[sp[0]]);
  MinkVector e2 = unit_spacelike(eig.vectors[sp[1]]);
  Mat2 blk;
  const Mat3 shifted = ms - metric();
  blk(0, 0) = e1.dot(shifted * e1);
  blk(0, 1) = blk(1, 0) = e1.dot(shifted * e2);
  blk(1, 1) = e2.dot(shifted * e2);
  const auto [gaps, rot] = detail::sym2_eigen(blk);
  if (!(gaps[0] > 0.0)) throw Error(Errc::not_an_ellipse, "normalized eigenvalue nu1 <= 1");
  const MinkVector f1 = rot(0, 0) * e1 + rot(1, 0) * e2;
  const MinkVector f2 = rot(0, 1) * e1 + rot(1, 1) * e2;
  return EllipseMatrix::from_frame(c, unit_spacelike(f1), unit_spacelike(f2), gaps[0], gaps[1]);
}

inline Containment contains(const EllipseMatrix& e, const MinkVector& x, double tol = kTol) {
  const double v = e.quadratic_form(x);
  if (v < -tol) return Containment::inside;
  if (v <= tol) return Containment::boundary;
  return Containment::outside;
}

inline CenterAxes center_and_axes(const EllipseMatrix& e) {
  CenterAxes ca;
  ca.center = e.center();
  ca.is_circle = e.is_circle();
  if (!ca.is_circle) ca.axis_dirs = std::array<MinkVector, 2>{e.major_axis(), e.minor_axis()};
  return ca;
}

/// Image of the ellipse under a Minkowski-orthogonal map g: (g^-1)^T M g^-1.
inline EllipseMatrix transform(const EllipseMatrix& e, const Mat3& g) {
  const double g1 = e.gap1(), g2 = e.gap2();
  return EllipseMatrix::from_frame(to_point(g * e.center()), unit_spacelike(g * e.major_axis()),
                                   unit_spacelike(g * e.minor_axis()), g1, g2);
}

}  // namespace hypell
