#pragma once

// Uniqueness certificate from an inscribed circle of radius rho and a
// circumscribed ellipse of area S: the minimal ellipse has semi-axes in
// [rho, R] where the (R, rho) ellipse has area S, and it is unique when
// H(coth^2 R, coth^2 rho) <= 0. Also the shrink construction for two
// congruent circles.

#include <cmath>
#include <limits>
#include <tuple>

#include "hypell/area.hpp"
#include "hypell/conics.hpp"
#include "hypell/enclosing.hpp"
#include "hypell/errors.hpp"
#include "hypell/hull.hpp"
#include "hypell/minkowski.hpp"
#include "hypell/uniqueness.hpp"

namespace hypell {

/// R >= rho with area_semiaxes(R, rho) = S, by bisection.
inline double solve_R_from_area(double rho, double S) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "rho must be positive");
  const double circ = circle_area(rho);
  if (!(S >= circ * (1.0 - 1e-12))) throw Error(Errc::infeasible, "S is below the area of the circle of radius rho");
  if (S <= circ) return rho;
  double lo = rho, hi = 2.0 * rho + 1.0;
  while (area_semiaxes(hi, rho) < S) {
    lo = hi;
    hi *= 2.0;
    if (hi > 300.0) throw Error(Errc::out_of_domain, "S too large for a representable semi-axis");
  }
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (area_semiaxes(mid, rho) < S ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

enum class Verdict { unique, inconclusive };

inline const char* to_string(Verdict v) { return v == Verdict::unique ? "unique" : "inconclusive"; }

struct UniquenessCertificate {
  double rho = 0.0;      ///< inscribed circle radius
  double S = 0.0;        ///< area of the circumscribed ellipse
  double R = 0.0;        ///< major semi-axis bound
  double nu1 = 0.0;      ///< coth^2 R
  double nu2 = 0.0;      ///< coth^2 rho
  double H_value = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

/// Steps three and four of the pipeline for given rho and S.
inline UniquenessCertificate certify_from(double rho, double S) {
  UniquenessCertificate c;
  c.rho = rho;
  c.S = S;
  c.R = solve_R_from_area(rho, S);
  c.nu1 = axis_to_eig(c.R);
  c.nu2 = axis_to_eig(rho);
  c.H_value = H(c.nu1, c.nu2);
  c.verdict = c.H_value <= 0.0 ? Verdict::unique : Verdict::inconclusive;
  return c;
}

struct CertifyReport {
  UniquenessCertificate certificate;
  InscribedCircle inscribed;
  EnclosingResult enclosing;
  double major = 0.0, minor = 0.0;  ///< semi-axes of the enclosing ellipse
  bool axes_in_interval = false;    ///< both lie in [rho, R]
};

inline CertifyReport certify(const PointSet& ps, const EnclosingOptions& o = {}) {
  CertifyReport rep;
  rep.inscribed = inscribed_circle(ps);
  rep.enclosing = min_ellipse(ps, o);
  rep.certificate = certify_from(rep.inscribed.radius, rep.enclosing.area);
  std::tie(rep.major, rep.minor) = rep.enclosing.ellipse.semiaxes();
  const double slack = 1e-9 * std::max(1.0, rep.certificate.R);
  rep.axes_in_interval = rep.minor >= rep.certificate.rho - slack && rep.major <= rep.certificate.R + slack;
  return rep;
}

struct TwoCircleShrink {
  EllipseMatrix circle = EllipseMatrix::diagonal(2.0, 2.0);
  MinkVector s0, s1;  ///< intersection points, the ends of the diameter
  double radius = 0.0;
};

/// The circle over the segment joining the two intersection points of
/// congruent circles c0 and c1.
inline TwoCircleShrink two_circle_shrink(const EllipseMatrix& c0, const EllipseMatrix& c1) {
  if (!c0.is_circle() || !c1.is_circle()) throw Error(Errc::invalid_configuration, "inputs must be circles");
  const double r0 = c0.semiaxes().first, r1 = c1.semiaxes().first;
  if (std::abs(r0 - r1) > 1e-9 * std::max(1.0, r0)) throw Error(Errc::invalid_configuration, "circles are not congruent");
  const double d = hyp_distance(c0.center(), c1.center());
  if (!(d > 1e-12)) throw Error(Errc::invalid_configuration, "circles share their center");
  if (!(d < 2.0 * r0)) throw Error(Errc::invalid_configuration, "circles do not meet in two points");
  TwoCircleShrink out;
  const MinkVector m = hyp_midpoint(c0.center(), c1.center());
  // Right triangle center - midpoint - intersection point.
  out.radius = std::acosh(std::cosh(r0) / std::cosh(0.5 * d));
  const MinkVector n = unit_spacelike(mink_cross(c0.center(), c1.center()));
  out.s0 = geodesic_point(m, n, out.radius);
  out.s1 = geodesic_point(m, n, -out.radius);
  out.circle = EllipseMatrix::circle(m, out.radius);
  return out;
}

}  // namespace hypell
