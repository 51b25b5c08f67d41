#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dickman/driven.hpp"

namespace dickman {

namespace {

// Merge component event paths (shared lambda) into one; exact because all
// components decay at the same rate.
EventPath merge_paths(std::vector<EventPath> parts, double lambda, double T) {
  EventPath out;
  out.lambda = lambda;
  out.horizon = T;
  std::size_t total = 0;
  for (const auto& p : parts) {
    out.x0 += p.x0;
    total += p.events.size();
  }
  out.events.reserve(total);
  for (auto& p : parts)
    out.events.insert(out.events.end(), p.events.begin(), p.events.end());
  std::sort(out.events.begin(), out.events.end());
  return out;
}

template <typename MarkFn>
EventPath simulate_compound(double rate, double lambda, double T, double x0,
                            Rng& rng, MarkFn&& mark) {
  EventPath path;
  path.lambda = lambda;
  path.horizon = T;
  path.x0 = x0;
  double t = rng.exponential(rate);
  while (t <= T) {
    path.events.emplace_back(t, mark());
    t += rng.exponential(rate);
  }
  return path;
}

}  // namespace

OrderKParams::OrderKParams(double theta_in, int k_in, double lambda_in)
    : theta(theta_in), k(k_in), lambda(lambda_in) {
  if (!(theta > 0.0) || k < 1 || !(lambda > 0.0))
    throw std::invalid_argument("OrderKParams: require theta, lambda > 0 and k >= 1");
}

BellTouchardParams::BellTouchardParams(double alpha_in, double nu_in, double lambda_in)
    : alpha(alpha_in), nu(nu_in), lambda(lambda_in) {
  if (!(alpha > 0.0) || !(nu > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("BellTouchardParams: require alpha, nu, lambda > 0");
}

EventPath simulate_ppk_ou(const OrderKParams& p, double T, Rng& rng, DriveMode mode) {
  if (!(T > 0.0)) throw std::invalid_argument("simulate_ppk_ou: T must be positive");
  if (mode == DriveMode::kSuperposition) {
    std::vector<EventPath> parts;
    parts.reserve(p.k);
    for (int j = 1; j <= p.k; ++j) {
      parts.push_back(simulate_exact(DickmanParams(p.theta, static_cast<double>(j)),
                                     p.lambda, T, rng));
    }
    return merge_paths(std::move(parts), p.lambda, T);
  }
  // Stationary initial value: the marginal is the independent sum of
  // GD(theta, j), j = 1..k.
  double x0 = 0.0;
  for (int j = 1; j <= p.k; ++j)
    x0 += sample_arrivals(DickmanParams(p.theta, static_cast<double>(j)), rng);
  const double rate = static_cast<double>(p.k) * p.theta * p.lambda;
  return simulate_compound(rate, p.lambda, T, x0, rng, [&rng, &p]() {
    return static_cast<double>(1 + rng.uniform_int(static_cast<std::uint64_t>(p.k)));
  });
}

std::pair<double, double> ppk_moments(const OrderKParams& p, double tau) {
  if (tau < 0.0) throw std::domain_error("ppk_moments: tau must be nonnegative");
  const double k = static_cast<double>(p.k);
  const double mean = p.theta * k * (k + 1.0) / 2.0;
  const double cov = 0.5 * p.theta * k * (k + 1.0) * (2.0 * k + 1.0) / 6.0 *
                     std::exp(-p.lambda * tau);
  return {mean, cov};
}

int sample_zero_truncated_poisson(double nu, Rng& rng) {
  if (!(nu > 0.0))
    throw std::invalid_argument("sample_zero_truncated_poisson: nu must be positive");
  const double target = rng.uniform01() * std::expm1(nu);
  double term = nu;  // nu^n / n! at n = 1
  double cum = term;
  int n = 1;
  while (cum < target && n < 10000) {
    ++n;
    term *= nu / static_cast<double>(n);
    cum += term;
  }
  return n;
}

int bt_truncation_order(double alpha, double nu, double tol) {
  // omitted mean: sum_{j>J} j alpha nu^j / j! = alpha nu sum_{i>=J} nu^i / i!
  double tail = alpha * nu * std::exp(nu);
  double term = alpha * nu;  // i = 0 term of alpha nu nu^i/i!
  int j = 0;
  while (tail >= tol && j < 10000) {
    tail -= term;
    ++j;
    term *= nu / static_cast<double>(j);
  }
  return std::max(j, 1);
}

EventPath simulate_bt_ou(const BellTouchardParams& p, double T, Rng& rng,
                         DriveMode mode) {
  if (!(T > 0.0)) throw std::invalid_argument("simulate_bt_ou: T must be positive");
  const int trunc = bt_truncation_order(p.alpha, p.nu);
  if (mode == DriveMode::kSuperposition) {
    std::vector<EventPath> parts;
    parts.reserve(trunc);
    double theta_j = p.alpha * p.nu;  // alpha nu^j / j! at j = 1
    for (int j = 1; j <= trunc; ++j) {
      parts.push_back(simulate_exact(DickmanParams(theta_j, static_cast<double>(j)),
                                     p.lambda, T, rng));
      theta_j *= p.nu / static_cast<double>(j + 1);
    }
    return merge_paths(std::move(parts), p.lambda, T);
  }
  double x0 = 0.0;
  double theta_j = p.alpha * p.nu;
  for (int j = 1; j <= trunc; ++j) {
    x0 += sample_arrivals(DickmanParams(theta_j, static_cast<double>(j)), rng);
    theta_j *= p.nu / static_cast<double>(j + 1);
  }
  const double rate = p.alpha * std::expm1(p.nu) * p.lambda;
  return simulate_compound(rate, p.lambda, T, x0, rng, [&rng, &p]() {
    return static_cast<double>(sample_zero_truncated_poisson(p.nu, rng));
  });
}

std::pair<double, double> bt_moments(const BellTouchardParams& p, double tau) {
  if (tau < 0.0) throw std::domain_error("bt_moments: tau must be nonnegative");
  const double mean = p.alpha * p.nu * std::exp(p.nu);
  const double cov = 0.5 * p.alpha * std::exp(p.nu) * p.nu * (p.nu + 1.0) *
                     std::exp(-p.lambda * tau);
  return {mean, cov};
}

}  // namespace dickman
