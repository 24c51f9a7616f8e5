#pragma once

// Figure of a point set and an ellipse in the Klein disk: absolute circle,
// points, hull, ellipse boundary, center and axes. Coordinates in the file
// are Klein coordinates; a group transform flips y for display.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "hypell/conics.hpp"
#include "hypell/hull.hpp"
#include "hypell/minkowski.hpp"

namespace hypell {

namespace detail {

inline std::string fmt_pt(const Vec2& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g,%.12g", p.x(), p.y());
  return buf;
}

/// Ends of the chord carrying the line through c in direction e.
inline std::pair<Vec2, Vec2> chord(const MinkVector& c, const MinkVector& e) {
  const MinkVector a = c + e, b = c - e;
  return {Vec2(a[1] / a[0], a[2] / a[0]), Vec2(b[1] / b[0], b[2] / b[0])};
}

}  // namespace detail

/// Boundary sampled at n parameter values and projected to the disk.
inline std::vector<Vec2> ellipse_polyline(const EllipseMatrix& e, int n = 256) {
  std::vector<Vec2> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(klein_project(e.boundary_point(2.0 * std::numbers::pi * i / n)));
  return out;
}

inline std::string render_svg(const PointSet& ps, const EllipseMatrix& e, int size = 640) {
  std::string s;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n",
                size, size);
  s += buf;
  s += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.004\">\n";
  s += "<circle id=\"absolute\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#000\"/>\n";

  std::string hull = "<polygon id=\"hull\" stroke=\"#888\" stroke-dasharray=\"0.01 0.01\" points=\"";
  for (auto i : convex_hull(ps)) hull += detail::fmt_pt(ps.klein()[i]) + " ";
  s += hull + "\"/>\n";

  std::string curve = "<polygon id=\"ellipse\" stroke=\"#c0392b\" points=\"";
  for (const auto& p : ellipse_polyline(e)) curve += detail::fmt_pt(p) + " ";
  s += curve + "\"/>\n";

  const Vec2 c = klein_project(e.center());
  for (const auto& axis : {e.major_axis(), e.minor_axis()}) {
    const auto [a, b] = detail::chord(e.center(), axis);
    s += "<line class=\"axis\" x1=\"" + std::to_string(a.x()) + "\" y1=\"" + std::to_string(a.y()) + "\" x2=\"" +
         std::to_string(b.x()) + "\" y2=\"" + std::to_string(b.y()) + "\" stroke=\"#2c7fb8\"/>\n";
  }
  s += "</g>\n<g transform=\"scale(1,-1)\" fill=\"#000\">\n";
  for (const auto& p : ps.klein())
    s += "<circle class=\"point\" cx=\"" + std::to_string(p.x()) + "\" cy=\"" + std::to_string(p.y()) + "\" r=\"0.008\"/>\n";
  s += "<circle id=\"center\" cx=\"" + std::to_string(c.x()) + "\" cy=\"" + std::to_string(c.y()) +
       "\" r=\"0.012\" fill=\"#2c7fb8\"/>\n";
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace hypell
