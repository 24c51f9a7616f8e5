// End-to-end use of the library: read a point file, find the inscribed
// circle and the minimal enclosing ellipse, and decide whether the
// certificate proves that ellipse unique.
//
//   hypell_pipeline [points.json]

#include <cstdio>
#include <string>

#include "hypell/hypell.hpp"
#include "hypell/io.hpp"

int main(int argc, char** argv) {
  using namespace hypell;
  const std::string path = argc > 1 ? argv[1] : HYPELL_SAMPLES "/points/tight_cloud.json";
  try {
    const PointSet ps = parse_point_file(read_file(path));
    const auto rep = certify(ps);
    const auto& e = rep.enclosing.ellipse;
    const auto [a, b] = e.semiaxes();
    std::printf("%zu points, %zu on the hull\n", ps.size(), convex_hull(ps).size());
    std::printf("inscribed radius rho = %.10f\n", rep.inscribed.radius);
    std::printf("minimal ellipse: semi-axes %.10f %.10f, area %.10f, %zu contacts\n", a, b, rep.enclosing.area,
                rep.enclosing.contacts.size());
    std::printf("R with area(R, rho) = S: %.10f\n", rep.certificate.R);
    std::printf("H(coth^2 R, coth^2 rho) = %.6g -> %s\n", rep.certificate.H_value, to_string(rep.certificate.verdict));
  } catch (const Error& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
}
