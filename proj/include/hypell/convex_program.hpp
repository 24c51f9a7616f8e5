#pragma once

// Minimal area among ellipses with a fixed center. In the frame [c f1 f2] at
// the center, a point x has coordinates y = (<f1,x>, <f2,x>) and lies inside
// the ellipse with gap matrix P exactly when y^T P y <= 1: a linear
// constraint in z = (P11, P12, P22). The area is convex in z, so a
// primal-dual interior point method followed by an active-set Newton polish
// finds the unique minimizer.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "hypell/area.hpp"
#include "hypell/errors.hpp"

namespace hypell {

struct ConvexOptions {
  int max_iter = 200;
  double gap_tol = 1e-13;   ///< mean complementarity, relative to the area
  double dual_tol = 1e-11;  ///< stationarity residual, relative to the gradient
  double active_tol = 1e-8; ///< |1 - a^T z| counted as a contact
};

struct ConvexResult {
  Eigen::Vector3d z = Eigen::Vector3d::Zero();  ///< (P11, P12, P22)
  Eigen::VectorXd multipliers;
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  bool polished = false;
  std::vector<int> active;
};

/// Row (y1^2, 2 y1 y2, y2^2): the constraint y^T P y <= 1 reads row . z <= 1.
inline Eigen::Vector3d containment_row(double y1, double y2) { return {y1 * y1, 2.0 * y1 * y2, y2 * y2}; }

namespace detail {

inline bool gap_matrix_pd(const Eigen::Vector3d& z) { return z[0] > 0.0 && z[2] > 0.0 && z[0] * z[2] - z[1] * z[1] > 0.0; }

}  // namespace detail

/// Minimize area(B w) subject to rows(i) . (B w) <= 1. B is 3 x k and spans
/// the admissible gap matrices (k = 3 for a free frame, k = 2 for fixed axes).
inline ConvexResult minimize_area_linear(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& B,
                                         const ConvexOptions& o = {}) {
  const int m = int(rows.rows()), k = int(B.cols());
  if (m == 0) throw Error(Errc::degenerate_input, "no containment constraints");
  const Eigen::MatrixXd A = rows * B;  // constraints in w

  // Start from the inverse second-moment matrix of the points, restricted to
  // the span of B and scaled so the worst point has slack 1/2. A small
  // circle start is hopeless for far-flung points, where the area grows
  // like g^(-1/2).
  Eigen::Matrix2d mom = Eigen::Matrix2d::Zero();
  for (int i = 0; i < m; ++i) {
    mom(0, 0) += rows(i, 0);
    mom(0, 1) += 0.5 * rows(i, 1);
    mom(1, 1) += rows(i, 2);
  }
  mom(1, 0) = mom(0, 1);
  mom += 1e-9 * mom.trace() * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d pinv = mom.inverse();
  Eigen::Vector3d z0(pinv(0, 0), pinv(0, 1), pinv(1, 1));
  const auto cod = B.completeOrthogonalDecomposition();
  Eigen::VectorXd w = cod.solve(z0);
  if (!detail::gap_matrix_pd(B * w)) w = cod.solve(Eigen::Vector3d(1.0, 0.0, 1.0));
  const double worst = (rows * (B * w)).maxCoeff();
  if (!(worst > 0.0) || !std::isfinite(worst)) throw Error(Errc::degenerate_input, "containment constraints are degenerate");
  w *= 0.5 / worst;

  const auto zof = [&](const Eigen::VectorXd& v) -> Eigen::Vector3d { return B * v; };
  Eigen::VectorXd s = Eigen::VectorXd::Ones(m) - A * w;
  SpatialArea f = spatial_area(zof(w));
  Eigen::VectorXd g = B.transpose() * f.grad;
  Eigen::MatrixXd H = B.transpose() * f.hess * B;
  // Multipliers sized so that s_i mu_i matches g . w, the area's response to
  // scaling the gap matrix; unlike |g| this does not depend on the units of z.
  const double tau0 = std::max(std::abs(g.dot(w)), 1e-12 * std::max(1.0, f.value)) / m;
  Eigen::VectorXd mu = (tau0 / s.array()).matrix();

  ConvexResult r;
  for (r.iterations = 0; r.iterations < o.max_iter; ++r.iterations) {
    const Eigen::VectorXd rd = g + A.transpose() * mu;
    const double gap = s.dot(mu) / m;
    if (rd.norm() <= o.dual_tol * std::max(1.0, g.norm()) && gap <= o.gap_tol * std::max(1.0, f.value)) {
      r.converged = true;
      break;
    }
    const double sigma = gap > 1e-4 * std::max(1.0, f.value) ? 0.2 : 0.02;
    const Eigen::ArrayXd d = mu.array() / s.array();
    const Eigen::MatrixXd K = H + A.transpose() * d.matrix().asDiagonal() * A;
    const Eigen::VectorXd rhs = -(g + A.transpose() * (sigma * gap / s.array()).matrix());
    const Eigen::VectorXd dw = K.ldlt().solve(rhs);
    const Eigen::VectorXd ds = -A * dw;
    const Eigen::VectorXd dmu = ((sigma * gap - s.array() * mu.array() - mu.array() * ds.array()) / s.array()).matrix();

    double ap = 1.0, ad = 1.0;
    for (int i = 0; i < m; ++i) {
      if (ds[i] < 0.0) ap = std::min(ap, -0.995 * s[i] / ds[i]);
      if (dmu[i] < 0.0) ad = std::min(ad, -0.995 * mu[i] / dmu[i]);
    }
    // Stay inside the cone of positive definite gap matrices and do not
    // let the barrier-augmented objective increase.
    const double merit0 = f.value - sigma * gap * s.array().log().sum();
    Eigen::VectorXd wn;
    SpatialArea fn;
    for (int bt = 0; bt < 60; ++bt, ap *= 0.5) {
      wn = w + ap * dw;
      const Eigen::Vector3d zn = zof(wn);
      if (!detail::gap_matrix_pd(zn)) continue;
      const Eigen::VectorXd sn = s + ap * ds;
      fn = spatial_area(zn, false);
      if (!std::isfinite(fn.value)) continue;
      const double merit = fn.value - sigma * gap * sn.array().log().sum();
      if (merit <= merit0 + 1e-4 * ap * (g.dot(dw) - sigma * gap * (ds.array() / s.array()).sum()) ||
          ap < 1e-12)
        break;
    }
    if (!detail::gap_matrix_pd(zof(wn)) || !std::isfinite(fn.value)) break;
    w = wn;
    s = Eigen::VectorXd::Ones(m) - A * w;
    // A common step keeps complementarity in step with the primal progress.
    mu += std::min(ap, ad) * dmu;
    f = spatial_area(zof(w));
    g = B.transpose() * f.grad;
    H = B.transpose() * f.hess * B;
  }
  r.z = zof(w);
  r.value = f.value;
  r.multipliers = mu;

  // Active-set polish: Newton on the equality-constrained KKT system.
  std::vector<int> act;
  for (int i = 0; i < m; ++i)
    if (mu[i] > s[i]) act.push_back(i);
  if (!act.empty()) {
    const int na = int(act.size());
    Eigen::MatrixXd Aa(na, k);
    for (int j = 0; j < na; ++j) Aa.row(j) = A.row(act[j]);
    Eigen::VectorXd wp = w, lam = Eigen::VectorXd::Zero(na);
    bool ok = true;
    for (int it = 0; it < 20 && ok; ++it) {
      const SpatialArea fp = spatial_area(zof(wp));
      Eigen::MatrixXd Kk = Eigen::MatrixXd::Zero(k + na, k + na);
      Kk.topLeftCorner(k, k) = B.transpose() * fp.hess * B;
      Kk.topRightCorner(k, na) = Aa.transpose();
      Kk.bottomLeftCorner(na, k) = Aa;
      Eigen::VectorXd rr(k + na);
      rr.head(k) = -(B.transpose() * fp.grad);
      rr.tail(na) = Eigen::VectorXd::Ones(na) - Aa * wp;
      const Eigen::VectorXd sol = Kk.completeOrthogonalDecomposition().solve(rr);
      const Eigen::VectorXd step = sol.head(k);
      wp += step;
      lam = sol.tail(na);
      if (!detail::gap_matrix_pd(zof(wp))) ok = false;
      if (step.norm() <= 1e-15 * std::max(1.0, wp.norm())) break;
    }
    if (ok) {
      const Eigen::Vector3d zp = zof(wp);
      const Eigen::VectorXd sp = Eigen::VectorXd::Ones(m) - A * wp;
      const double vp = spatial_area(zp, false).value;
      const double lam_scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
      if (sp.minCoeff() >= -1e-13 && lam.minCoeff() >= -1e-9 * lam_scale && vp <= r.value + 1e-10 * std::max(1.0, r.value)) {
        r.z = zp;
        r.value = vp;
        r.multipliers = Eigen::VectorXd::Zero(m);
        for (int j = 0; j < na; ++j) r.multipliers[act[j]] = lam[j];
        r.polished = true;
      }
    }
  }
  const Eigen::VectorXd sf = Eigen::VectorXd::Ones(m) - rows * r.z;
  for (int i = 0; i < m; ++i)
    if (std::abs(sf[i]) <= o.active_tol) r.active.push_back(i);
  return r;
}

}  // namespace hypell
