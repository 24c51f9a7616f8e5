// hypell: areas, minimal enclosing ellipses and uniqueness certificates in
// the hyperbolic plane.
//
// Exit codes: 0 success or affirmative verdict, 1 inconclusive verdict or
// suite violations, 2 input error, 3 solver did not converge.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypell/hypell.hpp"
#include "hypell/io.hpp"

using namespace hypell;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kNoConvergence = 3 };

void emit(const json& doc) { std::cout << to_text(doc) << std::flush; }

int cmd_area(const std::vector<double>& nu, const std::vector<double>& axes) {
  const bool by_nu = !nu.empty(), by_axes = !axes.empty();
  if (by_nu == by_axes) throw Error(Errc::invalid_parameter, "give either --nu1/--nu2 or --axes");
  double nu1, nu2;
  if (by_nu) {
    nu1 = std::min(nu[0], nu[1]);
    nu2 = std::max(nu[0], nu[1]);
    if (!(nu1 > 1.0)) throw Error(Errc::out_of_domain, "eigenvalues must exceed 1");
  } else {
    if (!(axes[0] > 0.0 && axes[1] > 0.0)) throw Error(Errc::out_of_domain, "semi-axes must be positive");
    std::tie(nu1, nu2) = semiaxes_to_eigs(axes[0], axes[1]);
  }
  char key[96];
  std::snprintf(key, sizeof key, "area %.17g %.17g", nu1, nu2);
  json doc = result_document("area", key);
  const auto [a, b] = eigs_to_semiaxes(nu1, nu2);
  doc["eigenvalues"] = json::array({1.0, nu1, nu2});
  doc["semiaxes"] = json::array({a, b});
  doc["area"] = area(nu1, nu2);
  emit(doc);
  return kOk;
}

int cmd_certify(const std::string& file, std::uint64_t seed) {
  const std::string bytes = read_file(file);
  const PointSet ps = parse_point_file(bytes);
  EnclosingOptions o;
  o.seed = seed;
  const auto rep = certify(ps, o);
  json doc = result_document("certify", bytes);
  doc["certificate"] = certificate_json(rep.certificate);
  json ins;
  ins["center"] = vec_json(rep.inscribed.center);
  ins["radius"] = rep.inscribed.radius;
  doc["inscribed_circle"] = ins;
  doc["ellipse"] = ellipse_json(rep.enclosing.ellipse);
  doc["semiaxes_in_interval"] = rep.axes_in_interval;
  doc["solver_converged"] = rep.enclosing.converged;
  emit(doc);
  return rep.certificate.verdict == Verdict::unique ? kOk : kNegative;
}

int cmd_solve(const std::string& file, const std::vector<double>& center, const std::string& svg,
              std::uint64_t seed) {
  const std::string bytes = read_file(file);
  const PointSet ps = parse_point_file(bytes);
  json doc = result_document("solve", bytes);
  std::optional<EllipseMatrix> e;
  bool converged = true;
  if (!center.empty()) {
    const auto r = min_ellipse_fixed_center(ps, klein_lift(center[0], center[1]));
    e = r.ellipse;
    converged = r.converged;
    doc["mode"] = "fixed-center";
    doc["contacts"] = r.contacts;
  } else {
    EnclosingOptions o;
    o.seed = seed;
    const auto r = min_ellipse(ps, o);
    e = r.ellipse;
    converged = r.converged;
    doc["mode"] = "general";
    doc["contacts"] = r.contacts;
    json diag;
    diag["evaluations"] = r.evaluations;
    diag["start_areas"] = r.start_areas;
    diag["multistart_spread"] = r.spread;
    doc["diagnostics"] = diag;
  }
  doc["converged"] = converged;
  doc["ellipse"] = ellipse_json(*e);
  if (!svg.empty()) {
    std::ofstream out(svg, std::ios::binary);
    if (!out) throw Error(Errc::invalid_parameter, "cannot write '" + svg + "'");
    out << render_svg(ps, *e);
  }
  emit(doc);
  return converged ? kOk : kNoConvergence;
}

int cmd_verify(const std::string& suite, long samples, std::uint64_t seed) {
  char key[128];
  std::snprintf(key, sizeof key, "verify %s %ld %llu", suite.c_str(), samples, static_cast<unsigned long long>(seed));
  const auto rep = run_suite(suite, samples, seed);
  json doc = result_document("verify", key);
  doc["report"] = suite_json(rep);
  emit(doc);
  return rep.violations() == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic ellipses: area, minimal enclosing ellipse, uniqueness certificate"};
  app.require_subcommand(1);

  std::vector<double> nu, axes, center;
  double nu1 = 0, nu2 = 0;
  auto* area_cmd = app.add_subcommand("area", "area of an ellipse from eigenvalues or semi-axes");
  auto* o_nu1 = area_cmd->add_option("--nu1", nu1, "smaller normalized eigenvalue (> 1)");
  auto* o_nu2 = area_cmd->add_option("--nu2", nu2, "larger normalized eigenvalue");
  o_nu1->needs(o_nu2);
  o_nu2->needs(o_nu1);
  area_cmd->add_option("--axes", axes, "semi-axis lengths a b")->expected(2);

  std::string file, svg;
  std::uint64_t seed = 0;
  auto* cert_cmd = app.add_subcommand("certify", "uniqueness certificate for a point file");
  cert_cmd->add_option("file", file, "point file")->required();
  cert_cmd->add_option("--seed", seed, "multistart seed");

  auto* solve_cmd = app.add_subcommand("solve", "minimal enclosing ellipse for a point file");
  solve_cmd->add_option("file", file, "point file")->required();
  solve_cmd->add_option("--center", center, "fixed center u v in Klein coordinates")->expected(2);
  solve_cmd->add_option("--svg", svg, "write a figure to this path");
  solve_cmd->add_option("--seed", seed, "multistart seed");

  std::string suite;
  long samples = 500;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "convexity|abgamma|bernstein|lemma9|halfturn|example1")->required();
  verify_cmd->add_option("--samples", samples, "number of random samples");
  verify_cmd->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*area_cmd) {
      if (o_nu1->count() > 0) nu = {nu1, nu2};
      return cmd_area(nu, axes);
    }
    if (*cert_cmd) return cmd_certify(file, seed);
    if (*solve_cmd) return cmd_solve(file, center, svg, seed);
    if (*verify_cmd) return cmd_verify(suite, samples, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
