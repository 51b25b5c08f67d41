#pragma once

#include <cstddef>
#include <vector>

#include "dickman/rng.hpp"

namespace dickman {

/// Parameters of the two-parameter Dickman law GD(theta, a): theta is the
/// arrival intensity of the driving Poisson stream, a the jump size (a pure
/// scale parameter).  Construction rejects nonpositive values.
struct DickmanParams {
  double theta;
  double a;

  DickmanParams(double theta_in, double a_in);

  double mean() const { return a * theta; }
  double variance() const { return a * a * theta / 2.0; }
};

/// E exp(-s D) = exp(-theta Ein(a s)) for s >= 0.
double laplace_transform(const DickmanParams& p, double s);

/// k-th cumulant a^k theta / k, k >= 1.
double cumulant(const DickmanParams& p, int k);

/// Dense tabulation of rho_theta on (0, x_max], produced by solving the
/// delay equation x rho' + (1 - theta) rho + theta rho(x - 1) = 0 interval
/// by interval (method of steps, RK4) with rho = x^(theta-1) on (0, 1].
///
/// values[k-1] holds rho at x = k * step; cum[k-1] holds \int_1^{k*step} rho
/// for grid points at or above 1 (zero below).  step is 1/cells_per_unit so
/// interval boundaries fall on the grid.
struct RhoTable {
  double theta = 0.0;
  double step = 0.0;
  double x_max = 0.0;
  int cells_per_unit = 0;
  std::vector<double> values;
  std::vector<double> cum;

  /// rho at x: 0 for x <= 0, the analytic branch on (0, 1], local series on
  /// the seeded sliver right of 1, cubic interpolation in the tabulated
  /// values elsewhere.  Throws std::invalid_argument beyond x_max.
  double eval(double x) const;

  /// \int_1^x rho for x in [1, x_max].
  double integral_from_one(double x) const;
};

/// Method-of-steps solve up to x_max (>= 1) with grid spacing at most
/// `step` (<= 0.01); the effective spacing is 1/ceil over a multiple of 8
/// so that unit intervals divide evenly.
RhoTable rho_solve(double theta, double x_max, double step = 1e-3);

enum class DensityMethod { kDde, kRecurrence };

struct DensityEval {
  double x = 0.0;
  double pdf = 0.0;
  DensityMethod method = DensityMethod::kDde;
};

/// Density e^(-gamma theta) / (a Gamma(theta)) rho_theta(x/a) for x > 0,
/// zero otherwise.  On (0, a] the exact analytic branch is returned with no
/// table lookup.  Requires table.theta == p.theta and x/a <= table.x_max.
DensityEval pdf(const DickmanParams& p, double x, const RhoTable& table);

/// Independent density route: the integral recurrence (closed form on
/// (0, a], adaptive quadrature on the correction integral above, inner
/// values resolved recursively).  Implemented on x <= 3a; deeper arguments
/// are out of contract.
DensityEval pdf_recurrence(const DickmanParams& p, double x, double quad_tol = 1e-9);

/// \int_0^x density, clamped to [0, 1]; exact power integral on (0, a],
/// tabulated cumulative above.  Requires x/a <= table.x_max.
double cdf(const DickmanParams& p, double x, const RhoTable& table);

/// GD(theta, a) draw from the Poisson-arrival series sum a e^{-T_n}; the
/// series is truncated once the expected remaining tail a theta e^{-T_n}
/// drops below tol, so the positive bias is below tol in expectation.
double sample_arrivals(const DickmanParams& p, Rng& rng, double tol = 1e-10);

/// GD(theta, a) draw from the perpetuity a U1^(1/theta) + a (U1 U2)^(1/theta)
/// + ...; truncated once the expected remaining tail theta P_n < tol.
double sample_perpetuity(const DickmanParams& p, Rng& rng, double tol = 1e-10);

}  // namespace dickman
