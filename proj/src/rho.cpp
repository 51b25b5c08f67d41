#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dickman/distribution.hpp"

namespace dickman {

namespace {

// Width of the sliver right of x = 1 filled from the local series expansion
// instead of ODE steps; the expansion absorbs the x -> 1+ derivative
// blow-up when theta < 1.
constexpr double kSeedWidth = 0.125;
constexpr int kSeedCellsDivisor = 8;  // cells_per_unit is a multiple of this
constexpr int kGradedSubsteps = 16;   // sub-steps in the first cell after a knot

// On (1, 2] variation of constants gives
//   rho(1 + s) = (1 + s)^(theta-1) (1 - theta B(s)),
//   B(s) = \int_0^s v^(theta-1) (1 + v)^(-theta) dv
//        = sum_j binom(-theta, j) s^(theta+j) / (theta + j).
double rho_series_right_of_one(double theta, double s) {
  double coef = 1.0;  // binom(-theta, j), j = 0
  double s_pow = std::pow(s, theta);
  double b = 0.0;
  for (int j = 0; j < 80; ++j) {
    const double term = coef * s_pow / (theta + static_cast<double>(j));
    b += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(b))) break;
    coef *= -(theta + static_cast<double>(j)) / static_cast<double>(j + 1);
    s_pow *= s;
  }
  return std::pow(1.0 + s, theta - 1.0) * (1.0 - theta * b);
}

struct Cubic {
  std::array<double, 4> c{};  // c0 + c1 x + c2 x^2 + c3 x^3
  double at(double x) const { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }
  double integral(double x) const {
    return (((c[3] * x / 4.0 + c[2] / 3.0) * x + c[1] / 2.0) * x + c[0]) * x;
  }
};

Cubic cubic_through(const std::array<double, 4>& d, const std::array<double, 4>& y) {
  Cubic out;
  for (int j = 0; j < 4; ++j) {
    double denom = 1.0;
    std::array<double, 3> r{};
    int m = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == j) continue;
      denom *= d[j] - d[i];
      r[m++] = d[i];
    }
    const double s1 = r[0] + r[1] + r[2];
    const double s2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
    const double s3 = r[0] * r[1] * r[2];
    const double w = y[j] / denom;
    out.c[0] += w * (-s3);
    out.c[1] += w * s2;
    out.c[2] += w * (-s1);
    out.c[3] += w;
  }
  return out;
}

// 4-point stencil for the cell/point at grid position `pos` (in units of
// the spacing), clamped inside the unit interval containing it so that
// interpolation never spans a knot.  Returns the first grid index k of the
// stencil (values are stored at index k-1).
long stencil_start(double y, double h, int per_unit, std::size_t n) {
  const long m = static_cast<long>(std::ceil(y - 1e-12)) - 1;  // y in (m, m+1]
  long lo = static_cast<long>(y / h) - 1;
  lo = std::max(lo, std::max<long>(m * per_unit, 1));
  lo = std::min(lo, std::min<long>((m + 1) * per_unit, static_cast<long>(n)) - 3);
  return lo;
}

Cubic cell_cubic(const std::vector<double>& values, double h, int per_unit,
                 double y) {
  const long lo = stencil_start(y, h, per_unit, values.size());
  std::array<double, 4> d{}, v{};
  for (int i = 0; i < 4; ++i) {
    d[i] = static_cast<double>(lo + i) * h;
    v[i] = values[static_cast<std::size_t>(lo + i) - 1];
  }
  return cubic_through(d, v);
}

double interp_table(const std::vector<double>& values, double h, int per_unit,
                    double y) {
  return cell_cubic(values, h, per_unit, y).at(y);
}

using GradedNodes = std::vector<std::pair<double, double>>;

double interp_graded(const GradedNodes& nodes, double y) {
  const auto it = std::lower_bound(
      nodes.begin(), nodes.end(), y,
      [](const auto& nv, double t) { return nv.first < t; });
  const long j = std::clamp<long>(it - nodes.begin() - 1, 0,
                                  static_cast<long>(nodes.size()) - 4);
  std::array<double, 4> d{}, v{};
  for (int i = 0; i < 4; ++i) {
    d[i] = nodes[static_cast<std::size_t>(j + i)].first;
    v[i] = nodes[static_cast<std::size_t>(j + i)].second;
  }
  return cubic_through(d, v).at(y);
}

struct Solver {
  double theta;
  int per_unit;
  double h;
  const std::vector<double>& values;
  const GradedNodes* prev_graded = nullptr;

  // rho one unit behind the point being advanced.
  double delayed(double y) const {
    if (y <= 1.0 + 1e-14) return std::pow(y, theta - 1.0);
    if (y <= 1.0 + kSeedWidth) return rho_series_right_of_one(theta, y - 1.0);
    const double m = std::ceil(y - 1e-12) - 1.0;  // y in (m, m+1]
    if (m >= 2.0 && y - m <= h * (1.0 + 1e-12) && prev_graded != nullptr &&
        !prev_graded->empty() &&
        std::abs(prev_graded->front().first - m) < 0.5) {
      return interp_graded(*prev_graded, y);
    }
    return interp_table(values, h, per_unit, y);
  }

  double f(double x, double v) const {
    return ((theta - 1.0) * v - theta * delayed(x - 1.0)) / x;
  }

  double rk4(double x, double v, double dt) const {
    const double k1 = f(x, v);
    const double k2 = f(x + 0.5 * dt, v + 0.5 * dt * k1);
    const double k3 = f(x + 0.5 * dt, v + 0.5 * dt * k2);
    const double k4 = f(x + dt, v + dt * k3);
    return v + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
};

}  // namespace

RhoTable rho_solve(double theta, double x_max, double step) {
  if (!(theta > 0.0)) throw std::invalid_argument("rho_solve: theta must be positive");
  if (!(x_max >= 1.0)) throw std::invalid_argument("rho_solve: x_max must be >= 1");
  if (!(step > 0.0) || step > 0.01)
    throw std::invalid_argument("rho_solve: require 0 < step <= 0.01");

  RhoTable table;
  table.theta = theta;
  const int per_unit = kSeedCellsDivisor *
      static_cast<int>(std::ceil(1.0 / (kSeedCellsDivisor * step)));
  const double h = 1.0 / static_cast<double>(per_unit);
  const auto n = static_cast<std::size_t>(std::ceil(x_max * per_unit - 1e-9));
  table.step = h;
  table.cells_per_unit = per_unit;
  table.x_max = static_cast<double>(n) * h;
  table.values.assign(n, 0.0);
  auto x_of = [h](std::size_t k) { return static_cast<double>(k) * h; };

  // (0, 1]: analytic branch.
  const std::size_t pu = per_unit;
  for (std::size_t k = 1; k <= std::min(pu, n); ++k)
    table.values[k - 1] = std::pow(x_of(k), theta - 1.0);

  // (1, 1 + kSeedWidth]: local series.
  const std::size_t seed_cells = pu / kSeedCellsDivisor;
  for (std::size_t k = pu + 1; k <= std::min(pu + seed_cells, n); ++k)
    table.values[k - 1] = rho_series_right_of_one(theta, x_of(k) - 1.0);

  GradedNodes prev_graded;
  Solver s{theta, per_unit, h, table.values, &prev_graded};

  // Remainder of (1, 2]: plain RK4 (delayed argument in the analytic branch).
  std::size_t k = std::min(pu + seed_cells, n);
  if (k > 0 && k < std::min<std::size_t>(2 * pu, n)) {
    double v = table.values[k - 1];
    while (k < std::min<std::size_t>(2 * pu, n)) {
      v = s.rk4(x_of(k), v, h);
      ++k;
      table.values[k - 1] = v;
    }
  }

  // Intervals (m, m+1], m >= 2: graded sub-steps through the first cell
  // (the solution has only theta + m - 1 derivatives at the knot), then
  // uniform RK4.
  for (std::size_t m = 2; m * pu < n; ++m) {
    const std::size_t knot = m * pu;
    double v = table.values[knot - 1];
    GradedNodes graded;
    const double x_knot = x_of(knot);
    graded.emplace_back(x_knot, v);
    double x_prev = x_knot;
    for (int i = 1; i <= kGradedSubsteps; ++i) {
      const double frac = static_cast<double>(i) / kGradedSubsteps;
      const double x_next = x_knot + h * frac * frac * frac;
      v = s.rk4(x_prev, v, x_next - x_prev);
      graded.emplace_back(x_next, v);
      x_prev = x_next;
    }
    k = knot + 1;
    table.values[k - 1] = v;
    const std::size_t stop = std::min((m + 1) * pu, n);
    while (k < stop) {
      v = s.rk4(x_of(k), v, h);
      ++k;
      table.values[k - 1] = v;
    }
    prev_graded = std::move(graded);
  }

  // Cumulative integral from x = 1: per-cell integral of the interpolating
  // cubic, stencils clamped at knots.  cum[k-1] = \int_1^{k h}.
  table.cum.assign(n, 0.0);
  for (std::size_t cell = pu; cell + 1 <= n; ++cell) {
    const double a = x_of(cell), b = x_of(cell + 1);
    const Cubic c = cell_cubic(table.values, h, per_unit, 0.5 * (a + b));
    table.cum[cell] = table.cum[cell - 1] + (c.integral(b) - c.integral(a));
  }
  return table;
}

double RhoTable::eval(double x) const {
  if (x <= 0.0) return 0.0;
  if (x <= 1.0 + 1e-14) return std::pow(x, theta - 1.0);
  if (x <= 1.0 + kSeedWidth) return rho_series_right_of_one(theta, x - 1.0);
  if (x > x_max * (1.0 + 1e-12))
    throw std::invalid_argument("RhoTable::eval: x beyond tabulated range");
  return interp_table(values, step, cells_per_unit, std::min(x, x_max));
}

double RhoTable::integral_from_one(double x) const {
  if (x <= 1.0) return 0.0;
  if (x > x_max * (1.0 + 1e-12))
    throw std::invalid_argument("RhoTable::integral_from_one: x beyond range");
  x = std::min(x, x_max);
  const auto n = values.size();
  auto cell = static_cast<std::size_t>(x / step);
  cell = std::min(cell, n - 1);
  if (cell < static_cast<std::size_t>(cells_per_unit)) return 0.0;
  const double base = cum[cell - 1];
  const double a = static_cast<double>(cell) * step;
  if (x <= a) return base;
  const Cubic c = cell_cubic(values, step, cells_per_unit, 0.5 * (a + x));
  return base + (c.integral(x) - c.integral(a));
}

}  // namespace dickman
