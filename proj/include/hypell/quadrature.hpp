#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature over a finite interval.
// The integrand may return a double or a fixed-size Eigen vector; vector
// results share one subdivision and are controlled in the max-norm.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <queue>
#include <type_traits>
#include <vector>

namespace hypell::quad {

struct Options {
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
  int max_intervals = 2000;
};

template <class T>
struct Result {
  T value;
  double error;
  int intervals;
  bool converged;
};

namespace detail {

inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the center.
inline constexpr double kWg[4] = {0.129484966168869693270611432679082,
                                  0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975,
                                  0.417959183673469387755102040816327};

template <class T>
double norm_inf(const T& v) {
  if constexpr (std::is_arithmetic_v<T>)
    return std::abs(v);
  else
    return v.cwiseAbs().maxCoeff();
}

template <class T>
T zero_like(const T& v) {
  if constexpr (std::is_arithmetic_v<T>)
    return T(0);
  else
    return T::Zero(v.size());
}

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
auto gk15(const F& f, double a, double b) {
  using T = std::decay_t<decltype(f(a))>;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    kron += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  kron *= h;
  gauss *= h;
  const double err = norm_inf(T(kron - gauss));
  return Segment<T>{a, b, kron, err};
}

}  // namespace detail

/// Integrate f over [a, b]. Intervals are bisected largest-error first until
/// the summed error estimate is below max(abs_tol, rel_tol * |I|).
template <class F>
auto integrate(const F& f, double a, double b, const Options& opt = {}) {
  using T = std::decay_t<decltype(f(a))>;
  std::priority_queue<detail::Segment<T>> heap;
  auto first = detail::gk15(f, a, b);
  T total = first.value;
  double err = first.error;
  heap.push(std::move(first));
  int count = 1;
  auto done = [&] { return err <= std::max(opt.abs_tol, opt.rel_tol * detail::norm_inf(total)); };
  while (!done() && count < opt.max_intervals) {
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(std::move(worst));
      break;
    }
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  T sum = detail::zero_like(total);
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  const bool ok = esum <= std::max(opt.abs_tol, opt.rel_tol * detail::norm_inf(sum)) * 1.0000001;
  return Result<T>{sum, esum, count, ok};
}

}  // namespace hypell::quad
