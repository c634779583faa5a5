#include "vshift/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vshift/errors.hpp"
#include "vshift/jet.hpp"
#include "vshift/region.hpp"

namespace vshift {
namespace {

constexpr Complex kI{0.0, 1.0};
const double kSqrtPi = std::sqrt(kPi);

// sum_{n>=1} exp(log_scale - pi n^2 x) cos(sqrt(pi) root n z)
// The tail after term n is bounded by b_{n+1} / (1 - r) with
// b_n = exp(Re(log_scale) - pi n^2 Re(x) + n |Im(sqrt(pi) root z)|).
ThetaEval theta_series(Complex x, Complex root, Complex z, Complex log_scale,
                       const EvalSettings& settings) {
  if (!(x.real() > 0.0)) throw DomainError("theta series requires Re(x) > 0");
  const Complex u = kSqrtPi * root * z;
  const double kappa = std::abs(u.imag());
  const double rx = x.real();
  Complex sum{0.0, 0.0};
  for (int n = 1; n <= settings.max_terms(); ++n) {
    const double dn = n;
    const Complex e = log_scale - kPi * dn * dn * x;
    sum += 0.5 * (std::exp(e + kI * dn * u) + std::exp(e - kI * dn * u));

    const double ratio = std::exp(-kPi * (2.0 * dn + 3.0) * rx + kappa);
    if (ratio < 1.0) {
      const double next = dn + 1.0;
      const double b_next = std::exp(log_scale.real() - kPi * next * next * rx + next * kappa);
      const double tail = b_next / (1.0 - ratio);
      const double threshold =
          std::min(settings.quad_abs_tol(), 1e-17 * std::max(std::abs(sum), 1e-300));
      if (tail <= threshold) return {sum, n, tail};
    }
  }
  throw DivergenceError("theta series: Gaussian decay did not overcome cos growth within max_terms");
}

// ---------------------------------------------------------------------------
// psi1 and its alpha-derivatives via Taylor jets.

constexpr std::size_t kJetSize = 5;
using AlphaJet = Jet<kJetSize>;

enum class Route { direct, split };

struct QuadraticExponent {
  double quad;    // coefficient of -n^2 (positive)
  double linear;  // coefficient of +n
  double shift;   // constant

  double max_over_n() const {
    const double n = std::max(1.0, linear / (2.0 * quad));
    return shift - quad * n * n + linear * n;
  }
  double peak() const { return linear / (2.0 * quad); }
  double terms_to(double floor) const {
    return (linear + std::sqrt(linear * linear + 4.0 * quad * (shift - floor))) / (2.0 * quad);
  }
};

struct SplitGeometry {
  QuadraticExponent quarter;
  QuadraticExponent unit;
};

QuadraticExponent direct_geometry(double alpha, Complex z) {
  const Complex x = std::exp(2.0 * kI * alpha);
  const double kappa = std::abs((kSqrtPi * std::exp(kI * alpha) * z).imag());
  return {kPi * x.real(), kappa, 0.0};
}

SplitGeometry split_geometry(double alpha, Complex z) {
  const Complex x = std::exp(2.0 * kI * alpha);
  const Complex root = std::exp(kI * alpha);
  const Complex delta = x - kI;
  const Complex inv = 1.0 / delta;
  const double shift = (-0.25 * z * z * x * inv).real() - 0.5 * std::log(std::abs(delta));
  const double drift = std::abs((kSqrtPi * z * root * inv).real());
  return {{0.25 * kPi * inv.real(), 0.5 * drift, shift}, {kPi * inv.real(), drift, shift}};
}

Route choose_route(double alpha, Complex z) {
  const QuadraticExponent d = direct_geometry(alpha, z);
  const SplitGeometry s = split_geometry(alpha, z);
  const double direct_peak = std::max(d.max_over_n(), 0.0);
  const double split_peak =
      std::max({s.quarter.max_over_n(), s.unit.max_over_n(), 0.0});
  if (split_peak < direct_peak - 1e-12) return Route::split;
  if (direct_peak < split_peak - 1e-12) return Route::direct;
  const double floor = -40.0;
  return s.quarter.terms_to(floor) < d.terms_to(floor) ? Route::split : Route::direct;
}

bool small_enough(const AlphaJet& term, const AlphaJet& sum) {
  return term.max_abs() <= 1e-17 * std::max(1.0, sum.max_abs());
}

// psi(e^{2 i alpha}, z) as a jet in alpha, summed term by term.
AlphaJet psi_on_arc_direct(const AlphaJet& alpha, Complex z, const EvalSettings& settings) {
  const AlphaJet x = exp(alpha * (2.0 * kI));
  const AlphaJet root = exp(alpha * kI);  // principal sqrt(x) for |alpha| < pi/4
  const AlphaJet phase = root * (kI * kSqrtPi * z);
  const double peak = direct_geometry(alpha.value().real(), z).peak();
  AlphaJet sum;
  int quiet = 0;
  for (int n = 1; n <= settings.max_terms(); ++n) {
    const double dn = n;
    const AlphaJet e = x * (-kPi * dn * dn);
    const AlphaJet term = (exp(e + phase * dn) + exp(e - phase * dn)) * 0.5;
    sum += term;
    quiet = small_enough(term, sum) ? quiet + 1 : 0;
    if (quiet >= 2 && dn > peak) return sum;
  }
  throw DivergenceError("psi(e^{2i alpha}, z) series did not converge within max_terms");
}

// psi(i + delta, z) = 2 psi(4 delta, w) - psi(delta, w), w = z sqrt(i + delta)/sqrt(delta),
// with both halves moved through the psi(x, z) transformation:
// psi(i + delta, z) = delta^{-1/2} e^{-w^2/4} [psi(1/(4 delta), i w) - psi(1/delta, i w)] - 1/2.
AlphaJet psi_on_arc_split(const AlphaJet& alpha, Complex z, const EvalSettings& settings) {
  const AlphaJet x = exp(alpha * (2.0 * kI));
  const AlphaJet root = exp(alpha * kI);
  const AlphaJet delta = x - kI;
  const AlphaJet inv = reciprocal(delta);
  const AlphaJet inv_sqrt = reciprocal(sqrt(delta));
  const AlphaJet pre = x * inv * (-0.25 * z * z);
  const AlphaJet drift = root * inv * (kSqrtPi * z);
  const SplitGeometry g = split_geometry(alpha.value().real(), z);
  const double peak = std::max(g.quarter.peak(), g.unit.peak());

  AlphaJet sum;
  int quiet = 0;
  for (int n = 1; n <= settings.max_terms(); ++n) {
    const double dn = n;
    const AlphaJet eq = pre + inv * (-0.25 * kPi * dn * dn);
    const AlphaJet eu = pre + inv * (-kPi * dn * dn);
    const AlphaJet quarter = exp(eq + drift * (0.5 * dn)) + exp(eq - drift * (0.5 * dn));
    const AlphaJet unit = exp(eu + drift * dn) + exp(eu - drift * dn);
    const AlphaJet term = (quarter - unit) * 0.5;
    sum += term;
    quiet = small_enough(term, sum) ? quiet + 1 : 0;
    if (quiet >= 2 && dn > peak) return inv_sqrt * sum - 0.5;
  }
  throw DivergenceError("split theta series did not converge within max_terms");
}

AlphaJet psi1_jet(double alpha, Complex z, double lambda, const EvalSettings& settings) {
  if (!(std::abs(alpha) < kPi / 4.0)) {
    throw DomainError("psi1 requires -pi/4 < alpha < pi/4 (got " + std::to_string(alpha) + ")");
  }
  const AlphaJet a = AlphaJet::variable(alpha);
  const AlphaJet psi = choose_route(alpha, z) == Route::split ? psi_on_arc_split(a, z, settings)
                                                              : psi_on_arc_direct(a, z, settings);
  const Complex q = z * z / 8.0;
  const AlphaJet bracket = psi * std::exp(q) + 0.5 * std::exp(-q);
  const AlphaJet weight = exp(a * Complex{-lambda, 0.5});
  return weight * bracket;
}

void require_region(Complex z, const char* who) {
  if (!in_region(z)) {
    throw RegionError(std::string(who) + ": z = " + std::to_string(z.real()) + " + " +
                      std::to_string(z.imag()) + "i is not inside the region D");
  }
}

}  // namespace

ThetaEval psi_classical(double x, const EvalSettings& settings) {
  if (!(x > 0.0)) throw DomainError("psi(x) requires x > 0");
  return theta_series(Complex{x, 0.0}, Complex{std::sqrt(x), 0.0}, Complex{}, Complex{}, settings);
}

ThetaEval psi_general(Complex x, Complex z, const EvalSettings& settings) {
  if (!(x.real() > 0.0)) throw DomainError("psi(x, z) requires Re(x) > 0");
  return theta_series(x, std::sqrt(x), z, Complex{}, settings);
}

double jacobi_residual(double x, const EvalSettings& settings) {
  if (!(x > 0.0)) throw DomainError("jacobi_residual requires x > 0");
  const double lhs = std::sqrt(x) * (2.0 * psi_classical(x, settings).value.real() + 1.0);
  const double rhs = 2.0 * psi_classical(1.0 / x, settings).value.real() + 1.0;
  return std::abs(lhs - rhs);
}

Complex theta_side_a(Complex a, Complex z, const EvalSettings& settings) {
  if (!(a.real() > 0.0) || !((a * a).real() > 0.0)) {
    throw DomainError("theta transformation requires Re(a) > 0 and Re(a^2) > 0");
  }
  const Complex q = z * z / 8.0;
  const Complex sum = theta_series(a * a, a, z, Complex{}, settings).value;
  return std::sqrt(a) * (std::exp(-q) / (2.0 * a) - std::exp(q) * sum);
}

Complex theta_side_b(Complex b, Complex z, const EvalSettings& settings) {
  if (!(b.real() > 0.0) || !((b * b).real() > 0.0)) {
    throw DomainError("theta transformation requires Re(b) > 0 and Re(b^2) > 0");
  }
  const Complex q = z * z / 8.0;
  // cosh(sqrt(pi) b n z) = cos(sqrt(pi) b n (i z))
  const Complex sum = theta_series(b * b, b, kI * z, Complex{}, settings).value;
  return std::sqrt(b) * (std::exp(q) / (2.0 * b) - std::exp(-q) * sum);
}

double general_theta_residual(Complex a, Complex z, const EvalSettings& settings) {
  return std::abs(theta_side_a(a, z, settings) - theta_side_b(1.0 / a, z, settings));
}

double psi_xz_transform_residual(Complex x, Complex z, const EvalSettings& settings) {
  if (!(x.real() > 0.0)) throw DomainError("psi(x, z) transformation requires Re(x) > 0");
  const Complex lhs = psi_general(x, z, settings).value;
  const Complex damp = std::exp(-z * z / 4.0);
  const Complex root = std::sqrt(x);
  const Complex rhs =
      damp / root * psi_general(1.0 / x, kI * z, settings).value + damp / (2.0 * root) - 0.5;
  return std::abs(lhs - rhs);
}

Complex psi1(double alpha, Complex z, double lambda, const EvalSettings& settings) {
  return psi1_jet(alpha, z, lambda, settings).value();
}

Complex psi1_alpha_derivative(double alpha, Complex z, double lambda, int order,
                              const EvalSettings& settings) {
  if (order < 0 || order > 4) {
    throw UnsupportedOrderError("psi1_alpha_derivative supports orders 0..4");
  }
  return psi1_jet(alpha, z, lambda, settings).derivative(static_cast<std::size_t>(order));
}

Complex split_expression(Complex z, Complex delta, SplitForm form,
                           const EvalSettings& settings) {
  if (!(delta.real() > 0.0)) throw DomainError("split_expression requires Re(delta) > 0");
  const Complex x = form == SplitForm::quarter ? 1.0 / (4.0 * delta) : 1.0 / delta;
  const Complex stretch = 1.0 + kI / delta;
  const Complex w = kI * z * std::sqrt(stretch);
  const Complex log_scale = -0.5 * std::log(delta) - 0.25 * z * z * stretch;
  return theta_series(x, std::sqrt(x), w, log_scale, settings).value;
}

std::vector<double> split_decay(Complex z, std::span<const Complex> deltas, SplitForm form,
                                  const EvalSettings& settings) {
  require_region(z, "split_decay");
  std::vector<double> out;
  out.reserve(deltas.size());
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k].real() > 0.0)) throw ParameterError("split_decay: Re(delta) must be > 0");
    if (k > 0 && !(std::abs(deltas[k]) < std::abs(deltas[k - 1]))) {
      throw ParameterError("split_decay: deltas must be strictly decreasing");
    }
    out.push_back(std::abs(split_expression(z, deltas[k], form, settings)));
  }
  return out;
}

std::vector<double> split_decay(Complex z, std::span<const double> deltas, SplitForm form,
                                  const EvalSettings& settings) {
  std::vector<Complex> c(deltas.begin(), deltas.end());
  return split_decay(z, std::span<const Complex>(c), form, settings);
}

Complex psi_near_i(Complex z, double delta, const EvalSettings& settings) {
  require_region(z, "psi_near_i");
  if (!(delta > 0.0)) throw ParameterError("psi_near_i requires delta > 0");
  const Complex d{delta, 0.0};
  const Complex psi = split_expression(z, d, SplitForm::quarter, settings) -
                      split_expression(z, d, SplitForm::unit, settings) - 0.5;
  const Complex q = z * z / 8.0;
  return 0.5 * std::exp(-q) + std::exp(q) * psi;
}

}  // namespace vshift
