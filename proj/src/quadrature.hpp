#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace dickman::detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
inline constexpr double kGl16Nodes[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGl16Weights[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <typename F>
double gauss16(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kGl16Nodes[i];
    sum += kGl16Weights[i] * (f(c - dx) + f(c + dx));
  }
  return h * sum;
}

/// Composite 16-point Gauss-Legendre with panels no wider than max_width.
template <typename F>
double gauss16_composite(F&& f, double a, double b, double max_width) {
  if (b <= a) return 0.0;
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / max_width));
  const double w = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = a + static_cast<double>(i) * w;
    sum += gauss16(f, lo, (i + 1 == n) ? b : lo + w);
  }
  return sum;
}

/// Recursive adaptive Simpson with absolute tolerance.  Throws
/// std::runtime_error reporting the achieved tolerance when the depth
/// budget is exhausted before the local error bound is met.
template <typename F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F f, double tol, int max_depth = 48)
      : f_(f), tol_(tol), max_depth_(max_depth) {}

  double integrate(double a, double b) {
    achieved_ = 0.0;
    const double fa = f_(a), fb = f_(b), fm = f_(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double r = step(a, b, fa, fm, fb, whole, tol_, max_depth_);
    if (achieved_ > tol_) {
      throw std::runtime_error(
          "adaptive quadrature did not converge; achieved tolerance ~" +
          std::to_string(achieved_));
    }
    return r;
  }

 private:
  double step(double a, double b, double fa, double fm, double fb,
              double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double fml = f_(0.5 * (a + m));
    const double fmr = f_(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * fml + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * fmr + fb);
    const double err = (left + right - whole) / 15.0;
    if (depth <= 0 || std::abs(err) <= tol) {
      if (depth <= 0) achieved_ = std::max(achieved_, std::abs(err));
      return left + right + err;
    }
    return step(a, m, fa, fml, fm, left, 0.5 * tol, depth - 1) +
           step(m, b, fm, fmr, fb, right, 0.5 * tol, depth - 1);
  }

  F f_;
  double tol_;
  int max_depth_;
  double achieved_ = 0.0;
};

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  AdaptiveSimpson<F> as(std::forward<F>(f), tol);
  return as.integrate(a, b);
}

}  // namespace dickman::detail
