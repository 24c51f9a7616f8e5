#pragma once

// Polynomials of degree N on [0, 1] in the Bernstein basis
// B^N_i(t) = C(N, i) (1 - t)^(N - i) t^i.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace hypell {

template <std::size_t N>
struct BernsteinPoly {
  std::array<double, N + 1> coeffs{};

  /// de Casteljau evaluation.
  double operator()(double t) const {
    std::array<double, N + 1> b = coeffs;
    const double s = 1.0 - t;
    for (std::size_t r = 1; r <= N; ++r)
      for (std::size_t i = 0; i + r <= N; ++i) b[i] = s * b[i] + t * b[i + 1];
    return b[0];
  }

  /// Split at t into the coefficient sets over [0, t] and [t, 1].
  std::pair<BernsteinPoly, BernsteinPoly> split(double t) const {
    std::array<double, N + 1> b = coeffs;
    BernsteinPoly left, right;
    left.coeffs[0] = b[0];
    right.coeffs[N] = b[N];
    const double s = 1.0 - t;
    for (std::size_t r = 1; r <= N; ++r) {
      for (std::size_t i = 0; i + r <= N; ++i) b[i] = s * b[i] + t * b[i + 1];
      left.coeffs[r] = b[0];
      right.coeffs[N - r] = b[N - r];
    }
    return {left, right};
  }

  /// All coefficients <= 0 certifies the polynomial is <= 0 on [0, 1].
  bool certifies_nonpositive() const {
    for (double c : coeffs)
      if (c > 0.0) return false;
    return true;
  }
};

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Monomial coefficients a_0 + a_1 t + ... to Bernstein coefficients:
/// b_i = sum_{j <= i} C(i, j) / C(N, j) a_j.
template <std::size_t N>
BernsteinPoly<N> from_monomial(const std::array<double, N + 1>& a) {
  BernsteinPoly<N> p;
  for (std::size_t i = 0; i <= N; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += binomial(int(i), int(j)) / binomial(int(N), int(j)) * a[j];
    p.coeffs[i] = s;
  }
  return p;
}

/// Sign changes of f on (a, b): scan n uniform cells, then bisect each
/// bracket to width tol.
inline std::vector<double> sign_changes(const std::function<double(double)>& f, double a, double b, int n = 4096,
                                        double tol = 1e-14) {
  std::vector<double> roots;
  double x0 = a, f0 = f(a);
  for (int i = 1; i <= n; ++i) {
    const double x1 = a + (b - a) * i / n;
    const double f1 = f(x1);
    if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
      double lo = x0, hi = x1, flo = f0;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    if (f1 != 0.0) {
      x0 = x1;
      f0 = f1;
    }
  }
  return roots;
}

}  // namespace hypell
