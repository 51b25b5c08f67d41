#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dickman/supou.hpp"

namespace dickman {

namespace {

constexpr double kDecayCutoff = 46.0;  // e^{-46} ~ 1e-20, below double noise here

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

PiMeasure::PiMeasure(std::variant<Degenerate, Discrete, GammaShapeRate> v)
    : v_(std::move(v)) {}

PiMeasure PiMeasure::degenerate(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("PiMeasure::degenerate: lambda must be positive");
  return PiMeasure(Degenerate{lambda});
}

PiMeasure PiMeasure::discrete(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty())
    throw std::invalid_argument("PiMeasure::discrete: needs at least one atom");
  double total = 0.0;
  for (const auto& [lambda_j, p_j] : atoms) {
    if (!(lambda_j > 0.0) || !(p_j > 0.0))
      throw std::invalid_argument("PiMeasure::discrete: atoms must be positive");
    total += p_j;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("PiMeasure::discrete: weights must sum to 1");
  return PiMeasure(Discrete{std::move(atoms)});
}

PiMeasure PiMeasure::gamma_shape_rate(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("PiMeasure::gamma_shape_rate: shape and rate must be positive");
  return PiMeasure(GammaShapeRate{shape, rate});
}

double PiMeasure::eta() const {
  return std::visit(
      Overloaded{
          [](const Degenerate& d) { return d.lambda; },
          [](const Discrete& d) {
            double inv = 0.0;
            for (const auto& [lambda_j, p_j] : d.atoms) inv += p_j / lambda_j;
            return 1.0 / inv;
          },
          [](const GammaShapeRate& g) {
            if (g.shape <= 1.0)
              throw std::domain_error("PiMeasure::eta: undefined for gamma shape <= 1");
            return (g.shape - 1.0) / g.rate;
          }},
      v_);
}

double PiMeasure::correlation(double tau) const {
  if (tau < 0.0) throw std::domain_error("PiMeasure::correlation: tau must be >= 0");
  return std::visit(
      Overloaded{
          [tau](const Degenerate& d) { return std::exp(-d.lambda * tau); },
          [this, tau](const Discrete& d) {
            double s = 0.0;
            for (const auto& [lambda_j, p_j] : d.atoms)
              s += p_j / lambda_j * std::exp(-lambda_j * tau);
            return eta() * s;
          },
          [this, tau](const GammaShapeRate& g) {
            eta();  // validates shape > 1
            return std::pow(1.0 + tau / g.rate, -(g.shape - 1.0));
          }},
      v_);
}

double PiMeasure::inverse_second_moment() const {
  return std::visit(
      Overloaded{
          [](const Degenerate& d) { return 1.0 / (d.lambda * d.lambda); },
          [](const Discrete& d) {
            double s = 0.0;
            for (const auto& [lambda_j, p_j] : d.atoms)
              s += p_j / (lambda_j * lambda_j);
            return s;
          },
          [](const GammaShapeRate& g) {
            if (g.shape <= 2.0)
              return std::numeric_limits<double>::infinity();
            const double alpha = g.shape - 1.0;
            return g.rate * g.rate / (alpha * (alpha - 1.0));
          }},
      v_);
}

Memory PiMeasure::memory() const {
  return std::isfinite(inverse_second_moment()) ? Memory::kShort : Memory::kLong;
}

double PiMeasure::sample(Rng& rng) const {
  return std::visit(
      Overloaded{
          [](const Degenerate& d) { return d.lambda; },
          [&rng](const Discrete& d) {
            double u = rng.uniform01();
            for (const auto& [lambda_j, p_j] : d.atoms) {
              if (u < p_j) return lambda_j;
              u -= p_j;
            }
            return d.atoms.back().first;
          },
          [&rng](const GammaShapeRate& g) { return rng.gamma(g.shape, g.rate); }},
      v_);
}

double PiMeasure::sample_inverse_biased(Rng& rng) const {
  const double e = eta();
  return std::visit(
      Overloaded{
          [](const Degenerate& d) { return d.lambda; },
          [&rng, e](const Discrete& d) {
            double u = rng.uniform01();
            for (const auto& [lambda_j, p_j] : d.atoms) {
              const double q = e * p_j / lambda_j;
              if (u < q) return lambda_j;
              u -= q;
            }
            return d.atoms.back().first;
          },
          [&rng](const GammaShapeRate& g) {
            // xi^{-1} tilting of gamma(shape, rate) is gamma(shape-1, rate)
            return rng.gamma(g.shape - 1.0, g.rate);
          }},
      v_);
}

double SupOUEventSet::value_at(double t) const {
  double v = 0.0;
  for (const auto& [s, r] : arrivals) {
    if (s > t) break;
    const double x = r * (t - s);
    if (x < kDecayCutoff) v += amplitude * std::exp(-x);
  }
  return v;
}

GridPath SupOUEventSet::evaluate(double dt) const {
  if (!(dt > 0.0))
    throw std::invalid_argument("SupOUEventSet::evaluate: dt must be positive");
  GridPath g;
  g.t0 = 0.0;
  g.dt = dt;
  const auto n = static_cast<std::size_t>(std::ceil(horizon / dt)) + 1;
  g.values.assign(n, 0.0);
  for (const auto& [s, r] : arrivals) {
    // contribution window: grid points in [max(s, 0), s + cutoff/r]
    const double t_hi = s + kDecayCutoff / r;
    if (t_hi < 0.0) continue;
    auto i0 = (s <= 0.0) ? std::size_t{0}
                         : static_cast<std::size_t>(std::ceil(s / dt - 1e-12));
    const auto i1 = std::min<std::size_t>(
        n - 1, (t_hi >= horizon) ? n - 1
                                 : static_cast<std::size_t>(std::floor(t_hi / dt)));
    for (std::size_t i = i0; i <= i1; ++i) {
      const double t = static_cast<double>(i) * dt;
      if (t < s) continue;
      g.values[i] += amplitude * std::exp(-r * (t - s));
    }
  }
  return g;
}

SupOUEventSet supou_events(const DickmanParams& p, const PiMeasure& pi,
                           double t_min, double T, Rng& rng) {
  if (!(t_min < 0.0) || !(T > 0.0))
    throw std::invalid_argument("supou_events: require t_min < 0 < T");
  const double rate = p.theta * pi.eta();
  SupOUEventSet set;
  set.amplitude = p.a;
  set.t_min = t_min;
  set.horizon = T;
  double s = t_min + rng.exponential(rate);
  while (s <= T) {
    set.arrivals.emplace_back(s, pi.sample(rng));
    s += rng.exponential(rate);
  }
  return set;
}

SupOUEventSet supou_stationary_events(const DickmanParams& p, const PiMeasure& pi,
                                      double T, Rng& rng, double mass_tol) {
  if (!(T > 0.0)) throw std::invalid_argument("supou_stationary_events: T must be positive");
  if (!(mass_tol > 0.0))
    throw std::invalid_argument("supou_stationary_events: mass_tol must be positive");
  SupOUEventSet set;
  set.amplitude = p.a;
  set.horizon = T;
  // Residual masses of the pre-zero shots: v = a e^{-w} with w the arrivals
  // of a rate-theta Poisson process, each paired with a 1/xi-biased rate and
  // encoded as a synthetic arrival at S = -w/R (so v = a e^{R S}).
  double w = 0.0;
  while (p.a * p.theta * std::exp(-w) >= mass_tol) {
    w += rng.exponential(p.theta);
    const double r = pi.sample_inverse_biased(rng);
    set.arrivals.emplace_back(-w / r, r);
  }
  // Fresh shots on (0, T].
  const double rate = p.theta * pi.eta();
  double s = rng.exponential(rate);
  while (s <= T) {
    set.arrivals.emplace_back(s, pi.sample(rng));
    s += rng.exponential(rate);
  }
  std::sort(set.arrivals.begin(), set.arrivals.end());
  set.t_min = set.arrivals.empty() ? 0.0 : set.arrivals.front().first;
  return set;
}

std::pair<SupOUEventSet, GridPath> simulate_supdou(const DickmanParams& p,
                                                   const PiMeasure& pi, double t_min,
                                                   double T, double dt, Rng& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_supdou: dt must be positive");
  SupOUEventSet set = supou_events(p, pi, t_min, T, rng);
  GridPath g = set.evaluate(dt);
  return {std::move(set), std::move(g)};
}

double eta(const PiMeasure& pi) { return pi.eta(); }

double supou_correlation(const PiMeasure& pi, double tau) {
  return pi.correlation(tau);
}

Memory memory_classification(const PiMeasure& pi) { return pi.memory(); }

double truncation_bias(const DickmanParams& p, const PiMeasure& pi, double t_min) {
  if (!(t_min < 0.0)) throw std::invalid_argument("truncation_bias: t_min must be negative");
  return p.a * p.theta * pi.correlation(-t_min);
}

double default_t_min(const DickmanParams& p, const PiMeasure& pi, double rel_bias) {
  if (!(rel_bias > 0.0) || rel_bias >= 1.0)
    throw std::invalid_argument("default_t_min: rel_bias must lie in (0, 1)");
  return std::visit(
      Overloaded{
          [rel_bias](const PiMeasure::Degenerate& d) {
            return -std::log(1.0 / rel_bias) / d.lambda;
          },
          [&](const PiMeasure::Discrete&) {
            // correlation is decreasing; bracket then bisect
            double hi = 1.0;
            while (pi.correlation(hi) > rel_bias) hi *= 2.0;
            double lo = 0.0;
            for (int i = 0; i < 200 && hi - lo > 1e-9 * (1.0 + hi); ++i) {
              const double mid = 0.5 * (lo + hi);
              (pi.correlation(mid) > rel_bias ? lo : hi) = mid;
            }
            return -hi;
          },
          [&, rel_bias](const PiMeasure::GammaShapeRate& g) {
            pi.eta();  // validates
            const double alpha = g.shape - 1.0;
            return -g.rate * (std::pow(rel_bias, -1.0 / alpha) - 1.0);
          }},
      pi.variant());
}

}  // namespace dickman
