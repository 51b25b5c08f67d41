#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace dickman {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// xoshiro256++ seeded through splitmix64.  Distinct (seed, stream) pairs
/// give reproducible, effectively independent sequences, so ensembles can
/// be simulated one stream per path regardless of scheduling.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t st = seed;
    detail::splitmix64(st);
    st ^= 0xd1b54a32d192ed03ull * (stream + 1);
    for (auto& w : s_) w = detail::splitmix64(st);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Child generator for stream `stream`, deterministic in the current state.
  Rng split(std::uint64_t stream) { return Rng((*this)(), stream); }

  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform() { return 1.0 - uniform01(); }                                   // (0,1]

  double exponential(double rate) {
    if (rate <= 0) throw std::domain_error("Rng::exponential: rate must be positive");
    return -std::log(uniform()) / rate;
  }

  /// Count of unit-rate arrivals in [0, mean]; O(mean) but free of the
  /// underflow of the product form.
  std::uint64_t poisson(double mean) {
    if (mean < 0) throw std::domain_error("Rng::poisson: mean must be nonnegative");
    std::uint64_t k = 0;
    double acc = -std::log(uniform());
    while (acc <= mean) {
      ++k;
      acc += -std::log(uniform());
    }
    return k;
  }

  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::domain_error("Rng::uniform_int: n must be positive");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>((*this)()) * n) >> 64);
  }

  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * m;
    has_cached_ = true;
    return u * m;
  }

  /// Gamma(shape, rate) via Marsaglia-Tsang; shapes below one handled by
  /// the usual boost Gamma(shape+1) * U^(1/shape).
  double gamma(double shape, double rate) {
    if (shape <= 0 || rate <= 0)
      throw std::domain_error("Rng::gamma: shape and rate must be positive");
    if (shape < 1.0) return gamma(shape + 1.0, rate) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace dickman
