#pragma once

// Derivative-free simplex search (Nelder and Mead, standard coefficients).
// Used for the low-dimensional outer problems: the center of the minimal
// ellipse and of the inscribed circle.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace hypell {

struct NelderMeadOptions {
  double step = 0.05;      ///< initial simplex edge
  int max_evals = 200;
  double ftol = 1e-14;     ///< relative spread of simplex values
  double xtol = 1e-10;     ///< simplex diameter
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

inline NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& x0, const NelderMeadOptions& o = {}) {
  const int n = int(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> val(n + 1);
  NelderMeadResult r;
  const auto eval = [&](const Eigen::VectorXd& x) {
    ++r.evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  for (int i = 0; i < n; ++i) pts[i + 1][i] += o.step;
  for (int i = 0; i <= n; ++i) val[i] = eval(pts[i]);

  std::vector<int> idx(n + 1);
  while (true) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
    const int best = idx[0], worst = idx[n], second = idx[n - 1];
    double diam = 0.0;
    for (int i = 1; i <= n; ++i) diam = std::max(diam, (pts[idx[i]] - pts[best]).norm());
    const double spread = val[worst] - val[best];
    if (std::isfinite(spread) && spread <= o.ftol * std::max(1.0, std::abs(val[best])) && diam <= o.xtol) {
      r.converged = true;
      break;
    }
    if (r.evals >= o.max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[idx[i]];
    centroid /= n;

    const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < val[best]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        val[worst] = fe;
      } else {
        pts[worst] = xr;
        val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = xr;
      val[worst] = fr;
      continue;
    }
    const bool outside = fr < val[worst];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                       : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : val[worst])) {
      pts[worst] = xc;
      val[worst] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      pts[idx[i]] = pts[best] + 0.5 * (pts[idx[i]] - pts[best]);
      val[idx[i]] = eval(pts[idx[i]]);
    }
  }
  const int best = int(std::min_element(val.begin(), val.end()) - val.begin());
  r.x = pts[best];
  r.value = val[best];
  return r;
}

}  // namespace hypell
