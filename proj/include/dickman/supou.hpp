#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "dickman/distribution.hpp"
#include "dickman/ou.hpp"
#include "dickman/rng.hpp"

namespace dickman {

enum class Memory { kShort, kLong };

/// Mixing measure pi over the mean-reversion rate of a supOU process.
/// Three variants: a point mass, a finite discrete measure, and a
/// gamma(shape, rate) density.  eta is the normalizing constant with
/// eta^{-1} = \int xi^{-1} pi(dxi); for the gamma variant it exists only
/// for shape > 1.
class PiMeasure {
 public:
  struct Degenerate {
    double lambda;
  };
  struct Discrete {
    std::vector<std::pair<double, double>> atoms;  // (lambda_j, p_j)
  };
  struct GammaShapeRate {
    double shape;  // 1 + alpha
    double rate;   // beta
  };

  static PiMeasure degenerate(double lambda);
  static PiMeasure discrete(std::vector<std::pair<double, double>> atoms);
  static PiMeasure gamma_shape_rate(double shape, double rate);

  double eta() const;
  /// eta * \int xi^{-1} e^{-tau xi} pi(dxi); closed form per variant.
  double correlation(double tau) const;
  /// \int xi^{-2} pi(dxi); infinity reported via memory().
  double inverse_second_moment() const;
  Memory memory() const;

  double sample(Rng& rng) const;
  /// Draw from the 1/xi-biased measure eta xi^{-1} pi(dxi) (the rate law of
  /// the residual masses of a stationary initial condition).
  double sample_inverse_biased(Rng& rng) const;

  const std::variant<Degenerate, Discrete, GammaShapeRate>& variant() const {
    return v_;
  }

 private:
  explicit PiMeasure(std::variant<Degenerate, Discrete, GammaShapeRate> v);

  std::variant<Degenerate, Discrete, GammaShapeRate> v_;
};

/// Shot-noise arrival set of a supOU path: Y(t) = sum over arrivals with
/// S_k <= t of amplitude * e^{-R_k (t - S_k)}.
struct SupOUEventSet {
  double amplitude = 0.0;
  double t_min = 0.0;
  double horizon = 0.0;
  std::vector<std::pair<double, double>> arrivals;  // (S_k, R_k), S increasing

  double value_at(double t) const;
  /// Values on the grid i*dt over [0, horizon].
  GridPath evaluate(double dt) const;
};

/// Arrivals of rate theta * eta(pi) on [t_min, T] with i.i.d. rates from pi
/// (the windowed shot-noise construction; mass older than t_min is
/// truncated, see truncation_bias).
SupOUEventSet supou_events(const DickmanParams& p, const PiMeasure& pi,
                           double t_min, double T, Rng& rng);

/// Exactly stationary construction: the pre-zero shots are replaced by
/// their residual masses at time 0 (a Poisson set with intensity theta/v on
/// (0, a], rates from the 1/xi-biased pi), encoded as synthetic arrivals
/// with S = log(v/a)/R < 0.  The omitted residual mass is below mass_tol in
/// expectation, uniformly in the horizon.
SupOUEventSet supou_stationary_events(const DickmanParams& p, const PiMeasure& pi,
                                      double T, Rng& rng, double mass_tol = 1e-10);

/// Windowed simulation plus grid evaluation.
std::pair<SupOUEventSet, GridPath> simulate_supdou(const DickmanParams& p,
                                                   const PiMeasure& pi, double t_min,
                                                   double T, double dt, Rng& rng);

double eta(const PiMeasure& pi);
double supou_correlation(const PiMeasure& pi, double tau);
Memory memory_classification(const PiMeasure& pi);

/// Expected mass omitted by truncating arrivals at t_min (< 0), evaluated
/// at time 0: a theta eta \int xi^{-1} e^{-|t_min| xi} pi(dxi).
double truncation_bias(const DickmanParams& p, const PiMeasure& pi, double t_min);

/// Largest t_min (closest to zero) with truncation bias at most
/// rel_bias * a * theta.
double default_t_min(const DickmanParams& p, const PiMeasure& pi,
                     double rel_bias = 1e-4);

}  // namespace dickman
