#include <cmath>
#include <stdexcept>

#include "dickman/distribution.hpp"
#include "dickman/special.hpp"
#include "quadrature.hpp"

namespace dickman {

namespace {

double density_const(const DickmanParams& p) {
  return std::exp(-kEulerGamma * p.theta) / gamma_fn(p.theta);
}

// \int_0^w t^(theta-1) (1+t)^(-theta) dt for w in [0, 1]: binomial series on
// the first sliver (exact handling of the t -> 0 singularity), composite
// Gauss-Legendre above.
double beta_like(double theta, double w) {
  if (w <= 0.0) return 0.0;
  const double w0 = std::min(w, 0.0625);
  double coef = 1.0;
  double w_pow = std::pow(w0, theta);
  double head = 0.0;
  for (int j = 0; j < 80; ++j) {
    const double term = coef * w_pow / (theta + static_cast<double>(j));
    head += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(head))) break;
    coef *= -(theta + static_cast<double>(j)) / static_cast<double>(j + 1);
    w_pow *= w0;
  }
  if (w <= w0) return head;
  const auto f = [theta](double t) {
    return std::pow(t, theta - 1.0) * std::pow(1.0 + t, -theta);
  };
  return head + detail::gauss16_composite(f, w0, w, 0.125);
}

}  // namespace

DickmanParams::DickmanParams(double theta_in, double a_in)
    : theta(theta_in), a(a_in) {
  if (!(theta > 0.0) || !(a > 0.0))
    throw std::invalid_argument("DickmanParams: theta and a must be positive");
}

double laplace_transform(const DickmanParams& p, double s) {
  if (std::isnan(s) || s < 0.0)
    throw std::domain_error("laplace_transform: s must be nonnegative");
  return std::exp(-p.theta * ein(p.a * s));
}

double cumulant(const DickmanParams& p, int k) {
  if (k < 1) throw std::domain_error("cumulant: order must be >= 1");
  return std::pow(p.a, k) * p.theta / static_cast<double>(k);
}

DensityEval pdf(const DickmanParams& p, double x, const RhoTable& table) {
  if (table.theta != p.theta)
    throw std::invalid_argument("pdf: table built for a different theta");
  DensityEval out{x, 0.0, DensityMethod::kDde};
  if (x <= 0.0) return out;
  const double u = x / p.a;
  if (u > table.x_max * (1.0 + 1e-12))
    throw std::invalid_argument("pdf: x/a beyond the tabulated range");
  const double k = density_const(p) / p.a;
  out.pdf = (u <= 1.0) ? k * std::pow(u, p.theta - 1.0) : k * table.eval(u);
  return out;
}

DensityEval pdf_recurrence(const DickmanParams& p, double x, double quad_tol) {
  if (!(quad_tol > 0.0))
    throw std::invalid_argument("pdf_recurrence: quad_tol must be positive");
  DensityEval out{x, 0.0, DensityMethod::kRecurrence};
  if (x <= 0.0) return out;
  const double a = p.a;
  const double theta = p.theta;
  if (x > 3.0 * a * (1.0 + 1e-12))
    throw std::invalid_argument("pdf_recurrence: implemented for x <= 3a");
  const double k = density_const(p) / a;
  const double u = x / a;
  if (u <= 1.0) {
    out.pdf = k * std::pow(u, theta - 1.0);
    return out;
  }

  // f(z) on (0, 2a], the inner values of the correction integral.  On the
  // second interval the inner integral reduces to the closed beta-like form
  // because its own correction range lies inside (0, a].
  const auto inner_density = [&](double z) {
    const double uz = z / a;
    if (uz <= 1.0) return k * std::pow(uz, theta - 1.0);
    return std::pow(uz, theta - 1.0) * (k - (theta / a) * density_const(p) * beta_like(theta, uz - 1.0));
  };
  const auto integrand = [&](double z) {
    return inner_density(z) * std::pow(1.0 + z / a, -theta);
  };

  // Correction integral over (0, x-a]; the z -> 0 endpoint is handled by
  // the series (the integrand behaves like z^(theta-1) there).
  const double c = x - a;
  const double sliver = std::min(c, 0.0625 * a);
  double corr = density_const(p) * beta_like(theta, sliver / a);
  if (c > sliver) {
    const double split = std::min(c, a);
    if (split > sliver)
      corr += detail::adaptive_simpson(integrand, sliver, split, quad_tol * 0.25);
    if (c > split)
      corr += detail::adaptive_simpson(integrand, split, c, quad_tol * 0.25);
  }
  out.pdf = std::pow(u, theta - 1.0) * (k - (theta / a) * corr);
  return out;
}

double cdf(const DickmanParams& p, double x, const RhoTable& table) {
  if (table.theta != p.theta)
    throw std::invalid_argument("cdf: table built for a different theta");
  if (x <= 0.0) return 0.0;
  const double u = x / p.a;
  if (u > table.x_max * (1.0 + 1e-12))
    throw std::invalid_argument("cdf: x/a beyond the tabulated range");
  double integral = std::pow(std::min(u, 1.0), p.theta) / p.theta;
  if (u > 1.0) integral += table.integral_from_one(u);
  const double v = density_const(p) * integral;
  return std::min(1.0, std::max(0.0, v));
}

double sample_arrivals(const DickmanParams& p, Rng& rng, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("sample_arrivals: tol must be positive");
  double sum = 0.0;
  double t = 0.0;
  while (p.a * p.theta * std::exp(-t) >= tol) {
    t += rng.exponential(p.theta);
    sum += p.a * std::exp(-t);
  }
  return sum;
}

double sample_perpetuity(const DickmanParams& p, Rng& rng, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("sample_perpetuity: tol must be positive");
  double prefactor = p.a;
  double sum = 0.0;
  while (p.theta * prefactor >= tol) {
    prefactor *= std::pow(rng.uniform(), 1.0 / p.theta);
    sum += prefactor;
  }
  return sum;
}

}  // namespace dickman
