#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "dickman/ou.hpp"
#include "quadrature.hpp"

namespace dickman {

double EventPath::value_at(double t) const {
  double v = x0 * std::exp(-lambda * t);
  for (const auto& [s, mark] : events) {
    if (s > t) break;
    v += mark * std::exp(-lambda * (t - s));
  }
  return v;
}

GridPath EventPath::evaluate(double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("EventPath::evaluate: dt must be positive");
  GridPath g;
  g.t0 = 0.0;
  g.dt = dt;
  const auto n = static_cast<std::size_t>(std::ceil(horizon / dt)) + 1;
  g.values.reserve(n);
  const double decay = std::exp(-lambda * dt);
  double v = x0;
  g.values.push_back(v);
  std::size_t e = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    v *= decay;
    while (e < events.size() && events[e].first <= t) {
      v += events[e].second * std::exp(-lambda * (t - events[e].first));
      ++e;
    }
    g.values.push_back(v);
  }
  return g;
}

EventPath simulate_exact(const DickmanParams& p, double lambda, double T, Rng& rng,
                         std::optional<double> x0) {
  if (!(lambda > 0.0) || !(T > 0.0))
    throw std::invalid_argument("simulate_exact: lambda and T must be positive");
  EventPath path;
  path.lambda = lambda;
  path.horizon = T;
  path.x0 = x0 ? *x0 : sample_arrivals(p, rng);
  const double rate = p.theta * lambda;
  double t = rng.exponential(rate);
  while (t <= T) {
    path.events.emplace_back(t, p.a);
    t += rng.exponential(rate);
  }
  return path;
}

GridPath simulate_grid(const DickmanParams& p, double lambda, double T, double dt,
                       Rng& rng) {
  if (!(lambda > 0.0) || !(T > 0.0))
    throw std::invalid_argument("simulate_grid: lambda and T must be positive");
  if (!(dt > 0.0) || dt >= T)
    throw std::invalid_argument("simulate_grid: require 0 < dt < T");
  GridPath g;
  g.t0 = 0.0;
  g.dt = dt;
  const auto n = static_cast<std::size_t>(std::ceil(T / dt)) + 1;
  g.values.reserve(n);
  double v = sample_arrivals(p, rng);
  g.values.push_back(v);
  const double decay = std::exp(-lambda * dt);
  double time = 0.0;
  double tau = rng.exponential(p.theta * lambda);
  for (std::size_t i = 1; i < n; ++i) {
    time += dt;
    if (time >= tau) {
      v = decay * v + p.a;
      tau += rng.exponential(p.theta * lambda);
    } else {
      v = decay * v;
    }
    g.values.push_back(v);
  }
  return g;
}

double transition_sample(const DickmanParams& p, double lambda, double x, double t,
                         Rng& rng) {
  if (!(lambda > 0.0) || !(t > 0.0))
    throw std::invalid_argument("transition_sample: lambda and t must be positive");
  if (x < 0.0) throw std::invalid_argument("transition_sample: x must be nonnegative");
  const auto n = rng.poisson(p.theta * lambda * t);
  double v = x * std::exp(-lambda * t);
  for (std::uint64_t k = 0; k < n; ++k)
    v += p.a * std::exp(-lambda * t * rng.uniform01());
  return v;
}

std::complex<double> transition_cf(const DickmanParams& p, double lambda, double x,
                                   double t, double z) {
  if (!(lambda > 0.0) || !(t > 0.0))
    throw std::invalid_argument("transition_cf: lambda and t must be positive");
  const double lo = p.a * std::exp(-lambda * t);
  const double hi = p.a;
  const double width = std::min(0.5, 1.0 / (1.0 + std::abs(z) * p.a));
  const auto re = [z](double u) { return (std::cos(u * z) - 1.0) / u; };
  const auto im = [z](double u) { return std::sin(u * z) / u; };
  const double ire = detail::gauss16_composite(re, lo, hi, width);
  const double iim = detail::gauss16_composite(im, lo, hi, width);
  const std::complex<double> exponent(p.theta * ire,
                                      z * std::exp(-lambda * t) * x + p.theta * iim);
  return std::exp(exponent);
}

double covariance(const DickmanParams& p, double lambda, double tau) {
  if (!(lambda > 0.0)) throw std::invalid_argument("covariance: lambda must be positive");
  if (tau < 0.0) throw std::domain_error("covariance: tau must be nonnegative");
  return p.variance() * std::exp(-lambda * tau);
}

double spectral_density(const DickmanParams& p, double lambda, double omega) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("spectral_density: lambda must be positive");
  const double pi = 3.14159265358979323846;
  return p.a * p.a * p.theta * lambda / (2.0 * pi * (lambda * lambda + omega * omega));
}

double ar1_innovation(const DickmanParams& p, double c, Rng& rng) {
  if (!(c > 0.0) || !(c < 1.0))
    throw std::invalid_argument("ar1_innovation: require 0 < c < 1");
  const auto n = rng.poisson(p.theta * std::log(1.0 / c));
  double sum = 0.0;
  for (std::uint64_t k = 0; k < n; ++k)
    sum += p.a * std::pow(c, rng.uniform01());
  return sum;
}

Ar1Chain ar1_simulate(const DickmanParams& p, double c, std::size_t n, Rng& rng) {
  if (!(c > 0.0) || !(c < 1.0))
    throw std::invalid_argument("ar1_simulate: require 0 < c < 1");
  if (n < 1) throw std::invalid_argument("ar1_simulate: n must be >= 1");
  Ar1Chain chain;
  chain.c = c;
  chain.values.reserve(n);
  double v = sample_arrivals(p, rng);
  chain.values.push_back(v);
  for (std::size_t i = 1; i < n; ++i) {
    v = c * v + ar1_innovation(p, c, rng);
    chain.values.push_back(v);
  }
  return chain;
}

double ar1_spectral_density(const DickmanParams& p, double c, double omega) {
  if (!(c > 0.0) || !(c < 1.0))
    throw std::invalid_argument("ar1_spectral_density: require 0 < c < 1");
  const double pi = 3.14159265358979323846;
  if (std::abs(omega) > pi * (1.0 + 1e-12))
    throw std::domain_error("ar1_spectral_density: omega must lie in [-pi, pi]");
  const double b = -std::log(c);
  const auto term = [&](double w) { return b / (b * b + w * w); };
  // Symmetric partial sum; the tail is replaced by its midpoint integral
  // whose closed form is an arctan, leaving a remainder well below 1e-10.
  const int kTerms = 512;
  double sum = term(omega);
  for (int k = 1; k <= kTerms; ++k) {
    sum += term(omega + 2.0 * pi * k) + term(omega - 2.0 * pi * k);
  }
  const double edge = 2.0 * pi * (kTerms + 0.5);
  sum += (0.5 * pi - std::atan((edge + omega) / b)) / (2.0 * pi);
  sum += (0.5 * pi - std::atan((edge - omega) / b)) / (2.0 * pi);
  return p.a * p.a * p.theta / (2.0 * pi) * sum;
}

}  // namespace dickman
