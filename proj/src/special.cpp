#include "dickman/special.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace dickman {

namespace {

constexpr double kEinSwitch = 10.0;

double ein_series(double z) {
  // sum_{k>=1} (-1)^{k-1} z^k/(k k!); alternating, remainder bounded by the
  // first omitted term.
  double term = z;  // k = 1
  double sum = z;
  for (int k = 2; k <= 120; ++k) {
    term *= -z / static_cast<double>(k);
    const double contrib = term / static_cast<double>(k);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

double ein_integrand(double u) {
  if (u < 1e-8) return 1.0 - 0.5 * u;
  return -std::expm1(-u) / u;
}

}  // namespace

double ein(double z) {
  if (std::isnan(z) || z < 0.0) throw std::domain_error("ein: z must be nonnegative");
  if (z == 0.0) return 0.0;
  if (z <= kEinSwitch) return ein_series(z);
  return detail::gauss16_composite(ein_integrand, 0.0, z, 2.0);
}

double gamma_fn(double x) {
  if (std::isnan(x) || x <= 0.0)
    throw std::domain_error("gamma_fn: argument must be positive");
  // Lanczos, g = 7, n = 9 (Godfrey coefficients).
  static constexpr double kG = 7.0;
  static constexpr double kCoef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection
    const double pi = 3.14159265358979323846;
    return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = kCoef[0];
  for (int i = 1; i < 9; ++i) acc += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + kG + 0.5;
  const double sqrt_two_pi = 2.50662827463100050241576528481;
  return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace dickman
