#pragma once

#include <span>
#include <vector>

#include "dickman/distribution.hpp"
#include "dickman/ou.hpp"
#include "dickman/rng.hpp"
#include "dickman/supou.hpp"

namespace dickman {

/// Centered integrated path Y*(t) = \int_0^t (Y(u) - a theta) du evaluated
/// at a set of times; ystar[0] corresponds to times[0] (prepend 0 to get
/// the value at the origin, which is always 0).
struct IntegratedPath {
  std::vector<double> times;
  std::vector<double> ystar;
};

/// Segment-exact integration of an event path (each inter-event segment is
/// a sum of exponentials with closed-form integral).
IntegratedPath integrate_path(const EventPath& path, const DickmanParams& p,
                              std::span<const double> times);

/// Trapezoid integration of a grid path at its own grid times.
IntegratedPath integrate_path(const GridPath& path, const DickmanParams& p);

/// Shot-exact integration of a supOU arrival set.
IntegratedPath integrate_path(const SupOUEventSet& set, const DickmanParams& p,
                              std::span<const double> times);

/// Brownian-limit variance eta a^2 theta \int xi^{-2} pi(dxi); defined for
/// short-memory pi only.
double fclt_sigma(const PiMeasure& pi, const DickmanParams& p);

struct ScalingEstimate {
  double q = 0.0;
  double slope = 0.0;
  double stderr_ = 0.0;
};

/// Least-squares slope of log(ensemble mean |Y*(T)|^q) against log T over
/// the given horizons; each path must carry ystar at exactly those
/// horizons.  Standard error by path-ensemble bootstrap.
ScalingEstimate stable_scaling_estimate(const std::vector<IntegratedPath>& paths,
                                        double q, std::span<const double> horizons,
                                        Rng& rng, int bootstrap = 200);

enum class ScalingRegime { kShortRegVar, kLongRegVar };

/// Piecewise moment scaling function: for short-memory regularly varying pi
/// (alpha > 1) q/2 then q - alpha after q = 2 alpha; for long memory
/// (alpha in (0,1)) q/(1+alpha) then q - alpha after q = 1 + alpha.
double tau_theoretical(double q, double alpha, ScalingRegime regime);

/// Discrete-sum normalizer (a^2 theta / 2) (1 + e^{-lambda}) / (1 - e^{-lambda}).
double s_d_squared(const DickmanParams& p, double lambda);

}  // namespace dickman
