#pragma once

// Complete elliptic integrals of the first and second kind in the modulus
// convention K(z) = int_0^1 dt / (sqrt(1-t^2) sqrt(1-z^2 t^2)), evaluated with
// the arithmetic-geometric mean.

#include <cmath>
#include <numbers>

#include "hypell/errors.hpp"

namespace hypell {

struct EllipticPair {
  double K;
  double E;
};

namespace detail {

// AGM with the running sum sum_n 2^(n-1) c_n^2, c_0 = z.
inline EllipticPair agm_elliptic(double z) {
  double a = 1.0;
  double b = std::sqrt((1.0 - z) * (1.0 + z));
  double c = z;
  double pow2 = 0.5;
  double sum = pow2 * c * c;
  for (int it = 0; it < 64; ++it) {
    if (std::abs(a - b) <= 1e-15 * a) break;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return {K, K * (1.0 - sum)};
}

}  // namespace detail

inline double elliptic_K(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw Error(Errc::out_of_domain, "elliptic_K: modulus must lie in [0, 1)");
  return detail::agm_elliptic(z).K;
}

inline double elliptic_E(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw Error(Errc::out_of_domain, "elliptic_E: modulus must lie in [0, 1]");
  if (z == 1.0) return 1.0;
  return detail::agm_elliptic(z).E;
}

inline EllipticPair elliptic_KE(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw Error(Errc::out_of_domain, "elliptic_KE: modulus must lie in [0, 1)");
  return detail::agm_elliptic(z);
}

}  // namespace hypell
