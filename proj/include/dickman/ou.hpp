#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dickman/distribution.hpp"
#include "dickman/rng.hpp"

namespace dickman {

/// Path sampled on a uniform grid t0 + i*dt.
struct GridPath {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> values;
};

/// Exact event-driven trajectory of a compound-Poisson-driven OU process:
/// the value at any t reconstructs as
///   x0 e^{-lambda t} + sum_{s_k <= t} mark_k e^{-lambda (t - s_k)}
/// with no discretization error.
struct EventPath {
  double x0 = 0.0;
  double lambda = 0.0;
  double horizon = 0.0;
  std::vector<std::pair<double, double>> events;  // (time, mark), times increasing

  double value_at(double t) const;
  /// Exact values on the grid i*dt, i = 0..ceil(horizon/dt).
  GridPath evaluate(double dt) const;
};

/// Stationary Dickman OU path on (0, T]: jump times are a Poisson process
/// of rate theta*lambda, all marks equal a, and x0 is a GD(theta, a) draw
/// when not supplied.
EventPath simulate_exact(const DickmanParams& p, double lambda, double T, Rng& rng,
                         std::optional<double> x0 = std::nullopt);

/// Grid simulation: per step the value decays by e^{-lambda dt} and the
/// jump +a is applied at the first grid point at or after each arrival.
GridPath simulate_grid(const DickmanParams& p, double lambda, double T, double dt,
                       Rng& rng);

/// One Markov transition draw from state x over time t:
///   e^{-lambda t} x + sum_{k=1}^{N} xi_k,
/// N ~ Poisson(theta lambda t), xi = a e^{-lambda t U} with U uniform.
double transition_sample(const DickmanParams& p, double lambda, double x, double t,
                         Rng& rng);

/// Transition characteristic function
///   exp{ i z e^{-lambda t} x + theta \int_{a e^{-lambda t}}^{a} (e^{iuz}-1) du/u }.
std::complex<double> transition_cf(const DickmanParams& p, double lambda, double x,
                                   double t, double z);

/// Stationary autocovariance a^2 (theta/2) e^{-lambda tau}, tau >= 0.
double covariance(const DickmanParams& p, double lambda, double tau);

/// Spectral density a^2 theta lambda / (2 pi (lambda^2 + omega^2)).
double spectral_density(const DickmanParams& p, double lambda, double omega);

/// Stationary AR(1) chain with GD(theta, a) marginals.
struct Ar1Chain {
  double c = 0.0;
  std::vector<double> values;
};

/// One innovation draw: a sum of N marks a c^U, N ~ Poisson(theta log(1/c)).
double ar1_innovation(const DickmanParams& p, double c, Rng& rng);

/// X_0 ~ GD(theta, a); X_n = c X_{n-1} + eps_n.
Ar1Chain ar1_simulate(const DickmanParams& p, double c, std::size_t n, Rng& rng);

/// Wrapped-Lorentzian spectral density of the AR(1) chain on [-pi, pi],
/// evaluated as a symmetric partial sum with an analytic tail correction
/// (remainder below 1e-10).
double ar1_spectral_density(const DickmanParams& p, double c, double omega);

}  // namespace dickman
