#pragma once

// Minimal-area enclosing ellipses: with prescribed axes, with a prescribed
// center, and in general. The first two are convex programs in the gap
// matrix at the center; the general problem searches the center with a
// simplex method around the fixed-center solve, which confines the
// non-convexity to two dimensions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "hypell/area.hpp"
#include "hypell/conics.hpp"
#include "hypell/convex_program.hpp"
#include "hypell/errors.hpp"
#include "hypell/hull.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/nelder_mead.hpp"
#include "hypell/random.hpp"

namespace hypell {

/// A center with two Minkowski-orthonormal tangent directions.
struct AxisFrame {
  MinkVector center{1, 0, 0};
  MinkVector e1{0, 1, 0};
  MinkVector e2{0, 0, 1};

  /// Axes at the given angle measured from the boosted first coordinate axis.
  static AxisFrame at(const MinkVector& c, double angle = 0.0) {
    const Mat3 f = frame_at(c);
    const double cs = std::cos(angle), sn = std::sin(angle);
    return {c, cs * f.col(1) + sn * f.col(2), -sn * f.col(1) + cs * f.col(2)};
  }

  void validate(double tol = 1e-9) const {
    if (!is_point(center)) throw Error(Errc::not_on_hyperboloid, "frame center is not a point");
    const double err = std::max({std::abs(mink_norm2(e1) - 1.0), std::abs(mink_norm2(e2) - 1.0),
                                 std::abs(mink_ip(e1, e2)), std::abs(mink_ip(center, e1)),
                                 std::abs(mink_ip(center, e2))});
    if (err > tol * std::max(1.0, center[0] * center[0]))
      throw Error(Errc::invalid_parameter, "axis frame is not Minkowski-orthonormal");
  }

  Vec2 coords(const MinkVector& x) const { return {mink_ip(e1, x), mink_ip(e2, x)}; }
};

struct FixedResult {
  EllipseMatrix ellipse = EllipseMatrix::diagonal(2.0, 2.0);
  double area = 0.0;
  std::vector<int> contacts;  ///< indices of points on the boundary, see on_boundary
  bool converged = false;
  int iterations = 0;
};

/// Ellipse centered at the frame's center with gap matrix z in its coordinates.
inline EllipseMatrix ellipse_from_gap_matrix(const AxisFrame& f, const Eigen::Vector3d& z) {
  Mat2 p;
  p << z[0], z[1], z[1], z[2];
  const auto [vals, vecs] = detail::sym2_eigen(p);
  const MinkVector a = vecs(0, 0) * f.e1 + vecs(1, 0) * f.e2;
  const MinkVector b = vecs(0, 1) * f.e1 + vecs(1, 1) * f.e2;
  return EllipseMatrix::from_frame(f.center, unit_spacelike(a), unit_spacelike(b), vals[0], vals[1]);
}

/// Gap matrix of an ellipse read in a frame at its own center.
inline Eigen::Vector3d gap_matrix_in(const AxisFrame& f, const EllipseMatrix& e) {
  Mat3 t;
  t.col(0) = f.center;
  t.col(1) = f.e1;
  t.col(2) = f.e2;
  const Mat3 m = t.transpose() * e.matrix() * t;
  return {m(1, 1) - 1.0, m(1, 2), m(2, 2) - 1.0};
}

/// |x^T M x| <= tol cosh^2 d(c, x): the form grows like the squared
/// distance-cosh, so far points need a proportionally looser test.
inline bool on_boundary(const EllipseMatrix& e, const MinkVector& x, double tol = 1e-8) {
  const double ch = mink_ip(e.center(), x);
  return std::abs(e.quadratic_form(x)) <= tol * ch * ch;
}

namespace detail {

inline Eigen::MatrixXd containment_rows(const std::vector<MinkVector>& pts, const AxisFrame& f) {
  Eigen::MatrixXd rows(pts.size(), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 y = f.coords(pts[i]);
    rows.row(i) = containment_row(y[0], y[1]).transpose();
  }
  return rows;
}

inline FixedResult fixed_solve(const std::vector<MinkVector>& pts, const AxisFrame& f, const Eigen::MatrixXd& B) {
  if (pts.empty()) throw Error(Errc::degenerate_input, "empty point set");
  const auto rows = containment_rows(pts, f);
  // A point at the center constrains nothing.
  Eigen::MatrixXd used(rows.rows(), 3);
  int n = 0;
  for (int i = 0; i < rows.rows(); ++i)
    if (rows(i, 0) + rows(i, 2) > 1e-300) used.row(n++) = rows.row(i);
  if (n == 0) throw Error(Errc::degenerate_input, "all points coincide with the center");
  const auto r = minimize_area_linear(used.topRows(n), B);
  FixedResult out;
  out.ellipse = ellipse_from_gap_matrix(f, r.z);
  out.area = r.value;
  out.converged = r.converged;
  out.iterations = r.iterations;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (on_boundary(out.ellipse, pts[i])) out.contacts.push_back(int(i));
  return out;
}

}  // namespace detail

/// Area-minimal ellipse with the frame's center and axis directions.
inline FixedResult min_ellipse_fixed_axes(const std::vector<MinkVector>& pts, const AxisFrame& f) {
  f.validate();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(3, 2);
  B(0, 0) = 1.0;
  B(2, 1) = 1.0;
  return detail::fixed_solve(pts, f, B);
}

/// Area-minimal ellipse with the given center.
inline FixedResult min_ellipse_fixed_center(const std::vector<MinkVector>& pts, const MinkVector& center) {
  const auto f = AxisFrame::at(center);
  f.validate();
  return detail::fixed_solve(pts, f, Eigen::MatrixXd::Identity(3, 3));
}

inline FixedResult min_ellipse_fixed_center(const PointSet& ps, const MinkVector& center) {
  return min_ellipse_fixed_center(ps.points(), center);
}

struct EnclosingOptions {
  int starts = 8;
  int max_evals = 200;       ///< outer evaluations per start
  std::uint64_t seed = 0;
  double center_tol = 1e-9;  ///< simplex diameter in Klein coordinates
};

struct EnclosingResult {
  EllipseMatrix ellipse = EllipseMatrix::diagonal(2.0, 2.0);
  double area = 0.0;
  std::vector<int> contacts;
  bool converged = false;
  int evaluations = 0;
  std::vector<double> start_areas;  ///< final area of every multistart
  double spread = 0.0;              ///< max - min over start_areas
};

/// Local minimum of the area over all enclosing ellipses. The hull vertices
/// carry all constraints, since hyperbolic ellipses are convex.
inline EnclosingResult min_ellipse(const PointSet& ps, const EnclosingOptions& o = {}) {
  const auto hull = hull_points(ps);
  const auto phi = [&](const Eigen::VectorXd& u) {
    if (u.squaredNorm() >= 1.0) return std::numeric_limits<double>::infinity();
    try {
      return min_ellipse_fixed_center(hull, klein_lift(u[0], u[1])).area;
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  Vec2 c0 = Vec2::Zero();
  for (const auto& p : hull) c0 += klein_project(p);
  c0 /= double(hull.size());
  double diam = 0.0;
  for (const auto& p : hull) diam = std::max(diam, (klein_project(p) - c0).norm());

  Rng rng(o.seed);
  EnclosingResult out;
  Eigen::VectorXd best_x = c0;
  double best = std::numeric_limits<double>::infinity();
  bool best_conv = false;
  for (int s = 0; s < o.starts; ++s) {
    Eigen::VectorXd x0 = c0;
    if (s > 0) {
      const double a = rng.uniform(0.0, 2.0 * std::numbers::pi), r = 0.3 * diam * std::sqrt(rng.uniform());
      x0 += Eigen::Vector2d(r * std::cos(a), r * std::sin(a));
    }
    NelderMeadOptions no;
    no.step = 0.1 * diam;
    no.max_evals = o.max_evals;
    no.ftol = 1e-15;
    no.xtol = o.center_tol;
    const auto r = nelder_mead(phi, x0, no);
    out.evaluations += r.evals;
    out.start_areas.push_back(r.value);
    if (r.value < best) {
      best = r.value;
      best_x = r.x;
      best_conv = r.converged;
    }
  }
  // Restarts from the best start with a shrinking simplex; the simplex
  // method can stall at a kink, and a fresh simplex gets it moving again.
  double step = 1e-3 * diam;
  for (int pass = 0; pass < 4 && !best_conv; ++pass, step *= 0.1) {
    NelderMeadOptions no;
    no.step = step;
    no.max_evals = o.max_evals;
    no.ftol = 1e-15;
    no.xtol = o.center_tol;
    const auto r = nelder_mead(phi, best_x, no);
    out.evaluations += r.evals;
    if (r.value <= best) {
      best = r.value;
      best_x = r.x;
    }
    best_conv = r.converged;
  }
  const auto fin = min_ellipse_fixed_center(hull, klein_lift(best_x[0], best_x[1]));
  out.ellipse = fin.ellipse;
  out.area = fin.area;
  out.converged = best_conv && fin.converged;
  const auto [lo, hi] = std::minmax_element(out.start_areas.begin(), out.start_areas.end());
  out.spread = *hi - *lo;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (on_boundary(out.ellipse, ps.points()[i])) out.contacts.push_back(int(i));
  return out;
}

}  // namespace hypell
