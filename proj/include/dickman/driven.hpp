#pragma once

#include <utility>

#include "dickman/ou.hpp"
#include "dickman/rng.hpp"

namespace dickman {

/// OU process driven by the Poisson process of order k: compound Poisson
/// arrivals of rate k*theta with discrete-uniform {1..k} marks.
struct OrderKParams {
  double theta;
  int k;
  double lambda;

  OrderKParams(double theta_in, int k_in, double lambda_in);
};

/// Bell-Touchard driven OU: compound Poisson arrivals of rate
/// alpha (e^nu - 1) with zero-truncated Poisson(nu) marks.
struct BellTouchardParams {
  double alpha;
  double nu;
  double lambda;

  BellTouchardParams(double alpha_in, double nu_in, double lambda_in);
};

enum class DriveMode {
  kDirect,         // one compound-Poisson engine with the generalized mark law
  kSuperposition,  // sum of independent Dickman OU components
};

/// Stationary order-k OU path.  Direct mode uses arrival rate
/// k*theta*lambda in real time; superposition mode merges k independent
/// DOU paths with parameters (theta, a_j = j, lambda).
EventPath simulate_ppk_ou(const OrderKParams& p, double T, Rng& rng, DriveMode mode);

/// (mean, lag-tau autocovariance):
///   theta k(k+1)/2,  (theta/2) k(k+1)(2k+1)/6 e^{-lambda tau}.
std::pair<double, double> ppk_moments(const OrderKParams& p, double tau);

/// Mark sampler P(Y = n) = nu^n / (n! (e^nu - 1)), n >= 1, by inversion.
int sample_zero_truncated_poisson(double nu, Rng& rng);

/// Stationary Bell-Touchard OU path.  Superposition mode truncates the
/// component sum at J chosen so the omitted stationary mean is below 1e-6.
EventPath simulate_bt_ou(const BellTouchardParams& p, double T, Rng& rng,
                         DriveMode mode);

/// (mean, lag-tau autocovariance):
///   alpha nu e^nu,  (alpha e^nu / 2) nu (nu + 1) e^{-lambda tau}.
std::pair<double, double> bt_moments(const BellTouchardParams& p, double tau);

/// Smallest J with omitted component mean sum_{j>J} j alpha nu^j / j! < tol.
int bt_truncation_order(double alpha, double nu, double tol = 1e-6);

}  // namespace dickman
