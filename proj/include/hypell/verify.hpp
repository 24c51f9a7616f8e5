#pragma once

// Verification suites over the analytic lemmas. Every suite counts
// violations per invariant and keeps the worst margin (largest value of a
// quantity that must be negative, or smallest of one that must be positive,
// as documented per invariant).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hypell/area.hpp"
#include "hypell/bernstein.hpp"
#include "hypell/deformation.hpp"
#include "hypell/errors.hpp"
#include "hypell/random.hpp"
#include "hypell/uniqueness.hpp"

namespace hypell {

struct Invariant {
  std::string name;
  long checked = 0;
  long violations = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();  ///< must stay <= 0 (or < 0)

  /// Record a value that must be <= tol (strict: < 0).
  void must_be_nonpositive(double v, double tol = 0.0) {
    ++checked;
    worst_margin = std::max(worst_margin, v);
    if (!(v <= tol)) ++violations;
  }
  void must_be_negative(double v) {
    ++checked;
    worst_margin = std::max(worst_margin, v);
    if (!(v < 0.0)) ++violations;
  }
};

struct SuiteReport {
  std::string suite;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<Invariant> invariants;
  std::vector<std::pair<std::string, double>> values;  ///< suite-specific numbers

  long violations() const {
    long v = 0;
    for (const auto& i : invariants) v += i.violations;
    return v;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"convexity", "abgamma", "bernstein", "lemma9", "halfturn", "example1"};
  return names;
}

// ------------------------------------------------------------- convexity

/// Leading minors of the area Hessian, scaled by the Hessian's size; margins
/// are the negated minors so that "must be negative" reads uniformly.
inline void convexity_point(double nu1, double nu2, Invariant& minor1, Invariant& det) {
  const Mat2 h = area_hessian(nu1, nu2);
  const double s = h.cwiseAbs().maxCoeff();
  minor1.must_be_negative(-h(0, 0) / s);
  det.must_be_negative(-h.determinant() / (s * s));
}

/// Log grid of n x n points on (lo, hi)^2 with nu1 <= nu2.
inline SuiteReport convexity_grid(int n = 40, double lo = 1.01, double hi = 1e3) {
  SuiteReport r{"convexity", 0, 0, {{"hessian_h11_positive"}, {"hessian_det_positive"}}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double a = lo * std::pow(hi / lo, double(i) / (n - 1));
      const double b = lo * std::pow(hi / lo, double(j) / (n - 1));
      convexity_point(a, b, r.invariants[0], r.invariants[1]);
      ++r.samples;
    }
  return r;
}

inline SuiteReport convexity_suite(long samples, std::uint64_t seed) {
  SuiteReport r{"convexity", samples, seed, {{"hessian_h11_positive"}, {"hessian_det_positive"}}, {}};
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    double a = 1.0 + rng.log_uniform(1e-2, 999.0), b = 1.0 + rng.log_uniform(1e-2, 999.0);
    if (a > b) std::swap(a, b);
    convexity_point(a, b, r.invariants[0], r.invariants[1]);
  }
  return r;
}

// ------------------------------------------------------------- A, B, Gamma

inline SuiteReport abgamma_suite(long samples, std::uint64_t seed, double nu_max = 1e3) {
  SuiteReport r{"abgamma", samples, seed, {{"A_lt_B"}, {"B_lt_Gamma"}, {"Gamma_lt_0"}}, {}};
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    double a = 1.0 + rng.log_uniform(1e-3, nu_max - 1.0), b = 1.0 + rng.log_uniform(1e-3, nu_max - 1.0);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const auto c = ab_gamma(a, b);
    const double s = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.Gamma)});
    r.invariants[0].must_be_negative((c.A - c.B) / s);
    r.invariants[1].must_be_negative((c.B - c.Gamma) / s);
    r.invariants[2].must_be_negative(c.Gamma / s);
  }
  return r;
}

// ------------------------------------------------------------- Bernstein

/// Signs of the Bernstein coefficients on random H-admissible instances and
/// the endpoint identities of the integrands J3, J4, J5.
inline SuiteReport bernstein_suite(long samples, std::uint64_t seed) {
  SuiteReport r{"bernstein",
                samples,
                seed,
                {{"p0_negative"},
                 {"p1_nonpositive"},
                 {"p2_nonpositive"},
                 {"p3_nonpositive"},
                 {"p4_negative"},
                 {"J3_endpoints"},
                 {"J4_endpoints"},
                 {"J5_endpoints"}},
                {}};
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    const auto in = random_instance(rng);
    const auto c = ab_gamma(in.nu01, in.nu02);
    const auto p = bernstein_coeffs(in, c);
    const double s = bernstein_scale(in, c);
    r.invariants[0].must_be_negative(p.coeffs[0] / s);
    for (int k = 1; k <= 3; ++k) r.invariants[k].must_be_nonpositive(p.coeffs[k] / s, 1e-13);
    r.invariants[4].must_be_negative(p.coeffs[4] / s);

    const double a = in.nu01, b = in.nu02, k = (a - 1.0) / (b - 1.0);
    const double sc = 1.0 + b * b;
    const auto id = [&](Invariant& inv, double lhs0, double rhs0, double lhs1, double rhs1) {
      inv.must_be_nonpositive(std::max(std::abs(lhs0 - rhs0), std::abs(lhs1 - rhs1)) / sc - 1e-10);
    };
    id(r.invariants[5], jterms::J3(a, b, 0), h(2, a, b), jterms::J3(a, b, 1), k * h(3, a, b));
    id(r.invariants[6], jterms::J4(a, b, 0), H(a, b), jterms::J4(a, b, 1), k * h(4, a, b));
    id(r.invariants[7], jterms::J5(a, b, 0), h(5, a, b), jterms::J5(a, b, 1), k * h(6, a, b));
  }
  return r;
}

// ------------------------------------------------------------- Lemma 9

inline SuiteReport lemma9_suite() {
  const auto s = lemma9_scan();
  SuiteReport r{"lemma9", s.points_in_U, 0, {}, {}};
  Invariant a{"H_implies_h1_to_h6", s.H_admissible, s.violations_a, s.worst_margin_a};
  Invariant b{"monotone_closure", s.points_in_U, s.violations_b, s.violations_b > 0 ? 1.0 : 0.0};
  Invariant c{"curves_increasing", 1, s.curves_increasing && s.gaps_increasing ? 0 : 1, 0.0};
  r.invariants = {a, b, c};
  r.values = {{"points_in_U", double(s.points_in_U)}, {"H_admissible", double(s.H_admissible)}};
  return r;
}

// ------------------------------------------------------------- Half-turn

inline InstanceOptions halfturn_instance_options() {
  InstanceOptions o;
  o.nu01_max = 50.0;
  o.r_max = 3.0;
  o.r_min = 1e-3;
  o.equal_area = true;
  o.overlapping = true;
  return o;
}

inline SuiteReport halfturn_suite(long samples, std::uint64_t seed, double small_lambda = 1e-3) {
  SuiteReport r{"halfturn", samples, seed, {{"preconditions"}, {"d_lambda_lt_d_star"}, {"area_drops_at_small_lambda"}}, {}};
  Rng rng(seed);
  const auto opts = halfturn_instance_options();
  for (long i = 0; i < samples; ++i) {
    const auto in = random_instance(rng, opts);
    const auto [c0, c1] = half_turn_ellipses(in);
    const auto rep = half_turn_lemma_check(c0, c1, small_lambda);
    r.invariants[0].must_be_nonpositive(rep.preconditions_ok ? 0.0 : 1.0);
    if (!rep.preconditions_ok) continue;
    const double sc = std::max(std::abs(rep.d_lambda), std::abs(rep.d_star));
    r.invariants[1].must_be_negative((rep.d_lambda - rep.d_star) / sc);
    r.invariants[2].must_be_negative((rep.area_small_lambda - rep.area_endpoint) / rep.area_endpoint);
  }
  return r;
}

// ------------------------------------------------------------- Example 1

inline SuiteReport example1_suite() {
  SuiteReport r{"example1", 1, 0, {{"two_sign_changes"}, {"zero_1_near_0.1272"}, {"zero_2_near_0.1389"}}, {}};
  const auto in = example1_instance();
  const auto p = bernstein_coeffs(in);
  const auto z = sign_changes([&](double t) { return p(t); }, 0.0, 1.0);
  r.invariants[0].must_be_nonpositive(std::abs(double(z.size()) - 2.0));
  const double z1 = z.size() > 0 ? z[0] : NAN, z2 = z.size() > 1 ? z[1] : NAN;
  r.invariants[1].must_be_nonpositive(std::abs(z1 - 0.1272) - 5e-4);
  r.invariants[2].must_be_nonpositive(std::abs(z2 - 0.1389) - 5e-4);
  for (std::size_t i = 0; i < z.size(); ++i) r.values.push_back({"zero_" + std::to_string(i + 1), z[i]});
  for (int k = 0; k <= 4; ++k) r.values.push_back({"p" + std::to_string(k), p.coeffs[k]});
  return r;
}

inline SuiteReport run_suite(const std::string& name, long samples, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::invalid_parameter, "samples must be at least 1");
  if (name == "convexity") return convexity_suite(samples, seed);
  if (name == "abgamma") return abgamma_suite(samples, seed);
  if (name == "bernstein") return bernstein_suite(samples, seed);
  if (name == "lemma9") return lemma9_suite();
  if (name == "halfturn") return halfturn_suite(samples, seed);
  if (name == "example1") return example1_suite();
  throw Error(Errc::invalid_parameter, "unknown suite '" + name + "'");
}

}  // namespace hypell
