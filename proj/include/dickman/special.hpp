#pragma once

namespace dickman {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240;

/// Modified exponential integral Ein(z) = \int_0^z (1 - e^{-u})/u du,
/// equal to sum_{k>=1} (-1)^{k-1} z^k / (k k!).  Evaluated by the
/// truncated alternating series for z <= 10 and by composite
/// Gauss-Legendre quadrature above; absolute error <= 1e-12.
/// Throws std::domain_error for z < 0.
double ein(double z);

/// Gamma function by the Lanczos approximation (g = 7, 9 coefficients),
/// relative error below 1e-12 on (0, 10].  Positive arguments only.
double gamma_fn(double x);

}  // namespace dickman
