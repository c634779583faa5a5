#include "vshift/integral.hpp"

#include <cmath>
#include <string>

#include "vshift/errors.hpp"
#include "vshift/region.hpp"
#include "vshift/specfun.hpp"
#include "vshift/theta.hpp"

namespace vshift {
namespace {

constexpr double kAlphaMargin = 0.01;
constexpr double kMajorantPower = 6.0;  // the A of the Xi decay majorant t^A e^{-pi t/4}
constexpr double kTruncationFloor = 40.0;

double log_majorant(double t, double power, double rate, double growth) {
  return power * std::log(t) + rate * t + growth * std::sqrt(t);
}

void require_region(Complex z, double max_abs, const char* who) {
  if (!in_region(z)) {
    throw RegionError(std::string(who) + ": z is not inside the region D");
  }
  if (std::abs(z) > max_abs) {
    throw DomainError(std::string(who) + ": |z| exceeds " + std::to_string(max_abs));
  }
}

QuadratureOptions options_for(const EvalSettings& settings, double width) {
  QuadratureOptions o;
  o.abs_tol = settings.quad_abs_tol();
  o.rel_tol = settings.rel_tol();
  o.initial_width = width;
  return o;
}

}  // namespace

Complex mu(Complex x, Complex z, Complex s, const EvalSettings& settings) {
  if (x == Complex{}) throw DomainError("mu requires x != 0");
  const Complex z2 = z * z;
  const Complex power = std::exp((0.5 - s) * std::log(x));
  return power * std::exp(-z2 / 8.0) * onef1(0.5 * (1.0 - s), 0.5, 0.25 * z2, settings).value;
}

Complex nabla(Complex x, Complex z, Complex s, const EvalSettings& settings) {
  return mu(x, z, s, settings) + mu(x, z, 1.0 - s, settings);
}

double truncation_point(double power, double rate, double growth, double bound, double floor) {
  if (!(rate < 0.0)) throw DomainError("truncation_point: the majorant does not decay");
  const double log_bound = std::log(bound);
  auto slope = [&](double t) { return power / t + rate + growth / (2.0 * std::sqrt(t)); };

  // The slope is decreasing in t, so the peak is its unique root.
  double peak_lo = 1e-12;
  double peak_hi = 1.0;
  while (slope(peak_hi) > 0.0) peak_hi *= 2.0;
  for (int i = 0; i < 200 && peak_hi - peak_lo > 1e-12 * peak_hi; ++i) {
    const double mid = 0.5 * (peak_lo + peak_hi);
    (slope(mid) > 0.0 ? peak_lo : peak_hi) = mid;
  }
  double lo = peak_hi;
  double hi = std::max(2.0 * lo, 1.0);
  while (log_majorant(hi, power, rate, growth) > log_bound) hi *= 2.0;
  if (log_majorant(lo, power, rate, growth) <= log_bound) return std::max(lo, floor);
  for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_majorant(mid, power, rate, growth) > log_bound ? lo : hi) = mid;
  }
  return std::max(hi, floor);
}

QuadratureResult xi_integral(Complex a, Complex z, const EvalSettings& settings) {
  const double modulus = std::abs(a);
  const double arg = std::arg(a);
  if (modulus < 0.5 || modulus > 2.0) throw DomainError("xi_integral requires 0.5 <= |a| <= 2");
  if (std::abs(arg) > kPi / 4.0 - kAlphaMargin) {
    throw DomainError("xi_integral: arg(a) too close to pi/4, integrand decay lost");
  }
  require_region(z, 1.5, "xi_integral");

  // |a^{-it/2}| = e^{arg(a) t/2} against the e^{-pi t/8} decay of Xi(t/2).
  const double rate = std::abs(arg) / 2.0 - kPi / 8.0;
  const double bound = 0.1 * settings.quad_abs_tol();
  const double T =
      truncation_point(kMajorantPower, rate, std::abs(z), bound, kTruncationFloor);

  auto integrand = [&](double t) -> Complex {
    const Complex s{0.5, 0.5 * t};
    return big_xi(0.5 * t, settings) / (1.0 + t * t) * nabla(a, z, s, settings) / kPi;
  };
  QuadratureResult r = integrate_adaptive(integrand, 0.0, T, options_for(settings, 4.0));
  r.abs_err_est += bound;
  r.truncation_T = T;
  return r;
}

double xi_integral_residual(Complex a, Complex z, const EvalSettings& settings) {
  const Complex integral = xi_integral(a, z, settings).value;
  const double side_a = std::abs(integral - theta_side_a(a, z, settings));
  const double side_b = std::abs(integral - theta_side_b(1.0 / a, z, settings));
  return std::max(side_a, side_b);
}

QuadratureResult moment_integral(int m, double alpha, double lambda, Complex z,
                                 const EvalSettings& settings) {
  if (m < 0 || m > 2) throw DomainError("moment integrals are supported for m in {0, 1, 2}");
  if (std::abs(alpha) > kPi / 4.0 - kAlphaMargin) {
    throw DomainError("moment integral: |alpha| must be <= pi/4 - 0.01");
  }
  require_region(z, 1.0, "moment_integral");

  const double power = 2.0 * m + kMajorantPower;
  const double growth = std::abs(z) / std::sqrt(2.0);
  const double bound = 0.1 * settings.quad_abs_tol();
  const double upper =
      truncation_point(power, alpha - kPi / 4.0, growth, bound, kTruncationFloor) + std::abs(lambda);
  const double lower =
      truncation_point(power, -alpha - kPi / 4.0, growth, bound, kTruncationFloor) + std::abs(lambda);

  const Complex w = 0.25 * z * z;
  const double log_pi = std::log(kPi);
  auto integrand = [&](double t) -> Complex {
    const double u = t + lambda;
    const Complex s{0.5, u};
    // e^{alpha t} rho(u) is below e^{-80} of any O(1) scale: skip the zeta sum.
    const double log_size = log_gamma(0.5 * s).real() - 0.25 * log_pi + alpha * t +
                            0.5 * std::log(3.0 + std::abs(u)) + 2.0 +
                            2.0 * m * std::log(1.0 + std::abs(t)) +
                            std::abs(z) * std::sqrt(std::abs(u) / 2.0) + 1.0;
    if (log_size < -80.0) return Complex{};
    const double weighted_rho = eta_completed_scaled(s, alpha * t, settings).value.real();
    const Complex kummer = onef1(Complex{0.25, -0.5 * u}, 0.5, w, settings).value;
    return std::pow(t, 2 * m) * weighted_rho * kummer;
  };
  QuadratureResult r = integrate_adaptive(integrand, -lower, upper, options_for(settings, 2.0));
  r.abs_err_est += 2.0 * bound;
  r.truncation_T = upper;
  return r;
}

double moment_integral_single(int m, double alpha, double lambda, Complex z,
                              const EvalSettings& settings) {
  return moment_integral(m, alpha, lambda, z, settings).value.real();
}

Complex moment_integral_rhs(int m, double alpha, double lambda, Complex z,
                            const EvalSettings& settings) {
  const Complex up{-lambda, 0.5};
  const Complex down{-lambda, -0.5};
  const Complex exponential =
      std::pow(up, 2 * m) * std::exp(alpha * up) + std::pow(down, 2 * m) * std::exp(alpha * down);
  const Complex theta_part = psi1_alpha_derivative(alpha, z, lambda, 2 * m, settings);
  return -2.0 * kPi * exponential + 4.0 * kPi * std::exp(z * z / 8.0) * theta_part;
}

}  // namespace vshift
