#pragma once

// Point sets, their hyperbolic convex hull and a large inscribed circle.
// Hyperbolic lines are chords of the Klein disk, so the hull is the
// Euclidean hull of the projected points.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hypell/errors.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/nelder_mead.hpp"

namespace hypell {

class PointSet {
 public:
  explicit PointSet(std::vector<MinkVector> pts) : points_(std::move(pts)) {
    if (points_.size() < 3) throw Error(Errc::degenerate_input, "need at least 3 points");
    klein_.reserve(points_.size());
    for (const auto& p : points_) {
      if (!is_point(p)) throw Error(Errc::not_on_hyperboloid, "point set entry is not on the hyperboloid");
      klein_.push_back(klein_project(p));
    }
    // Full-dimensional: some triple spans a triangle of positive area.
    double span = 0.0, extent = 0.0;
    const Vec2& a = klein_[0];
    std::size_t far = 0;
    for (std::size_t i = 1; i < klein_.size(); ++i)
      if ((klein_[i] - a).norm() > extent) extent = (klein_[i] - a).norm(), far = i;
    if (extent > 0.0) {
      const Vec2 d = (klein_[far] - a) / extent;
      for (const auto& q : klein_) span = std::max(span, std::abs(d.x() * (q - a).y() - d.y() * (q - a).x()));
    }
    if (!(span > 1e-12 * std::max(extent, 1e-300)) || extent == 0.0)
      throw Error(Errc::degenerate_input, "points lie on one hyperbolic line");
  }

  static PointSet from_klein(const std::vector<Vec2>& uv) {
    std::vector<MinkVector> pts;
    pts.reserve(uv.size());
    for (const auto& u : uv) pts.push_back(klein_lift(u));
    return PointSet(std::move(pts));
  }

  const std::vector<MinkVector>& points() const noexcept { return points_; }
  const std::vector<Vec2>& klein() const noexcept { return klein_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<MinkVector> points_;
  std::vector<Vec2> klein_;
};

/// Indices of the hull vertices, counterclockwise in the Klein disk
/// (monotone chain; collinear boundary points are dropped).
inline std::vector<std::size_t> convex_hull(const PointSet& ps) {
  const auto& k = ps.klein();
  std::vector<std::size_t> idx(k.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return k[a].x() < k[b].x() || (k[a].x() == k[b].x() && k[a].y() < k[b].y());
  });
  const auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (k[a] - k[o]).x() * (k[b] - k[o]).y() - (k[a] - k[o]).y() * (k[b] - k[o]).x();
  };
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (n >= 2 && cross(h[n - 2], h[n - 1], idx[i]) <= 0.0) --n;
    h[n++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, lo = n + 1; i-- > 0;) {
    while (n >= lo && cross(h[n - 2], h[n - 1], idx[i]) <= 0.0) --n;
    h[n++] = idx[i];
  }
  h.resize(n - 1);
  if (h.size() < 3) throw Error(Errc::degenerate_input, "hull is degenerate");
  return h;
}

inline std::vector<MinkVector> hull_points(const PointSet& ps) {
  std::vector<MinkVector> out;
  for (auto i : convex_hull(ps)) out.push_back(ps.points()[i]);
  return out;
}

/// Unit spacelike normals of the hull edges, oriented so that <n, x> > 0
/// for x inside the hull. The signed distance of x to edge i is asinh(<n_i, x>).
inline std::vector<MinkVector> edge_normals(const std::vector<MinkVector>& hull) {
  std::vector<MinkVector> n;
  const std::size_t m = hull.size();
  for (std::size_t i = 0; i < m; ++i) {
    // Counterclockwise order puts the interior on the left of a -> b.
    MinkVector v = mink_cross(hull[(i + 1) % m], hull[i]);
    v = unit_spacelike(v);
    if (mink_ip(v, hull[(i + 2) % m]) < 0.0) v = -v;
    n.push_back(v);
  }
  return n;
}

/// min_i asinh(<n_i, x>): positive inside the hull.
inline double hull_depth(const std::vector<MinkVector>& normals, const MinkVector& x) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& n : normals) d = std::min(d, std::asinh(mink_ip(n, x)));
  return d;
}

struct InscribedCircle {
  MinkVector center{1, 0, 0};
  double radius = 0.0;
};

/// Maximize the depth over the center by simplex search in Klein
/// coordinates, started from the vertex centroid and the edge midpoints'
/// centroid. Any circle inside the hull is acceptable for the certificate;
/// a larger one only sharpens it.
inline InscribedCircle inscribed_circle(const std::vector<MinkVector>& hull) {
  const auto normals = edge_normals(hull);
  const auto depth_at = [&](const Eigen::VectorXd& u) {
    if (u.squaredNorm() >= 1.0) return std::numeric_limits<double>::infinity();
    return -hull_depth(normals, klein_lift(u[0], u[1]));
  };
  Vec2 c0 = Vec2::Zero();
  MinkVector sum = MinkVector::Zero();
  for (const auto& p : hull) {
    c0 += klein_project(p);
    sum += p;
  }
  c0 /= double(hull.size());
  const Vec2 c1 = klein_project(to_point(sum));
  double diam = 0.0;
  for (const auto& p : hull) diam = std::max(diam, (klein_project(p) - c0).norm());

  InscribedCircle best;
  best.radius = -std::numeric_limits<double>::infinity();
  for (const Vec2& start : {c0, c1}) {
    NelderMeadOptions o;
    o.step = 0.25 * diam;
    o.max_evals = 600;
    o.ftol = 1e-15;
    o.xtol = 1e-12;
    Eigen::VectorXd x = start;
    // Restart twice from the result with a smaller simplex: the depth is a
    // nonsmooth max-min.
    for (int pass = 0; pass < 3; ++pass) {
      const auto r = nelder_mead(depth_at, x, o);
      x = r.x;
      o.step = std::max(1e-6, 0.05 * o.step);
      if (-r.value > best.radius) {
        best.radius = -r.value;
        best.center = klein_lift(r.x[0], r.x[1]);
      }
    }
  }
  if (!(best.radius > 0.0)) throw Error(Errc::degenerate_input, "hull has empty interior");
  return best;
}

inline InscribedCircle inscribed_circle(const PointSet& ps) { return inscribed_circle(hull_points(ps)); }

}  // namespace hypell
