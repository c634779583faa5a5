#include "vshift/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "vshift/errors.hpp"

namespace vshift {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr Complex kI{0.0, 1.0};

// Lanczos coefficients for g = 671/128 (15-term set).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// B_{2k} / (2k)! for k = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1124000727777607680000.0,
    -236364091.0 / 2730.0 / 620448401733239439360000.0,
    8553103.0 / 6.0 / 403291461126605635584000000.0};

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

Complex log_gamma_lanczos(Complex x) {
  Complex y = x;
  Complex tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  Complex ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / x);
}

// log sin(w) modulo 2*pi*i, stable for large |Im w|.
Complex log_sin(Complex w) {
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
  if (w.imag() > 0.0) {
    return -kI * w + std::log(Complex{0.0, 0.5}) + std::log(1.0 - std::exp(2.0 * kI * w));
  }
  return kI * w - std::log(Complex{0.0, 2.0}) + std::log(1.0 - std::exp(-2.0 * kI * w));
}

const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> v(1 << 15);
    for (std::size_t n = 1; n < v.size(); ++n) v[n] = std::log(static_cast<double>(n));
    return v;
  }();
  return table;
}

struct EulerMaclaurin {
  Complex value;
  double trunc_err;
  double round_err;
};

EulerMaclaurin euler_maclaurin(Complex s, int n_direct) {
  const auto& logs = log_table();
  const double sigma = s.real();
  const double t = s.imag();
  double re = 0.0;
  double im = 0.0;
  double abs_sum = 0.0;
  for (int n = 1; n < n_direct; ++n) {
    const double ln = n < static_cast<int>(logs.size()) ? logs[n] : std::log(static_cast<double>(n));
    const double r = std::exp(-sigma * ln);
    re += r * std::cos(t * ln);
    im -= r * std::sin(t * ln);
    abs_sum += r;
  }
  const double big_n = n_direct;
  const Complex n_pow = std::exp(-s * std::log(big_n));  // N^{-s}
  Complex sum{re, im};
  sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  Complex rising = s;
  Complex power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  double last = 0.0;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const Complex term = kBernoulliOverFactorial[k] * rising * power;
    sum += term;
    last = std::abs(term);
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    power *= inv_n2;
  }
  return {sum, last, 4.0 * kEps * (abs_sum + std::abs(sum))};
}

ValueWithError zeta_strip(Complex s, const EvalSettings& settings) {
  int n = std::max(settings.em_terms(), static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
  n = std::min(n, settings.max_terms());
  for (;;) {
    const EulerMaclaurin em = euler_maclaurin(s, n);
    const double tol = settings.rel_tol() * std::abs(em.value) + em.round_err;
    if (em.trunc_err <= tol) return {em.value, em.trunc_err + em.round_err};
    if (n >= settings.max_terms()) {
      throw AccuracyError("zeta: Euler-Maclaurin error estimate " + std::to_string(em.trunc_err) +
                          " exceeds tolerance after max_terms");
    }
    n = std::min(2 * n, settings.max_terms());
  }
}

}  // namespace

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma pole at s = " + std::to_string(s.real()));
  if (s.real() < 0.5) {
    return std::log(kPi) - log_sin(kPi * s) - log_gamma_lanczos(1.0 - s);
  }
  return log_gamma_lanczos(s);
}

ValueWithError gamma_c(Complex s) {
  const Complex lg = log_gamma(s);
  if (lg.real() > 709.0) throw OverflowError("|Gamma(s)| exceeds the double range");
  const Complex value = std::exp(lg);
  const double mag = std::abs(s);
  return {value, std::abs(value) * kEps * (16.0 + 2.0 * mag * std::log(2.0 + mag))};
}

ValueWithError zeta_c(Complex s, const EvalSettings& settings) {
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta pole at s = 1");
  if (s.real() >= 0.0) return zeta_strip(s, settings);

  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
  if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0) return {Complex{0.0, 0.0}, 0.0};
  const ValueWithError reflected = zeta_strip(1.0 - s, settings);
  const Complex log_factor = s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                             log_sin(0.5 * kPi * s) + log_gamma(1.0 - s);
  if (log_factor.real() > 709.0) throw OverflowError("zeta functional-equation factor overflows");
  const Complex factor = std::exp(log_factor);
  const Complex value = factor * reflected.value;
  const double mag = std::abs(s);
  return {value, std::abs(factor) * reflected.abs_err_est +
                     std::abs(value) * kEps * (16.0 + 2.0 * mag * std::log(2.0 + mag))};
}

ValueWithError eta_completed_scaled(Complex s, double log_scale, const EvalSettings& settings) {
  if (s == Complex{0.0, 0.0} || s == Complex{1.0, 0.0}) {
    throw PoleError("completed zeta pole at s = " + std::to_string(s.real()));
  }
  // eta(s) = eta(1 - s); fold the left half-plane onto Re(s) >= 1/2 - ... >= 0.
  if (s.real() < 0.0) s = 1.0 - s;
  const ValueWithError z = zeta_c(s, settings);
  const Complex log_factor = -0.5 * s * std::log(kPi) + log_gamma(0.5 * s) + log_scale;
  if (log_factor.real() > 709.0) throw OverflowError("scaled completed zeta overflows");
  const Complex factor = std::exp(log_factor);
  const Complex value = factor * z.value;
  const double mag = std::abs(s);
  return {value, std::abs(factor) * z.abs_err_est +
                     std::abs(value) * kEps * (16.0 + mag * std::log(2.0 + mag))};
}

ValueWithError eta_completed(Complex s, const EvalSettings& settings) {
  return eta_completed_scaled(s, 0.0, settings);
}

ValueWithError xi_c(Complex s, const EvalSettings& settings) {
  constexpr double kRemovableRadius = 1e-8;
  if (std::abs(s) < kRemovableRadius || std::abs(s - 1.0) < kRemovableRadius) {
    return {Complex{0.5, 0.0}, 0.0};
  }
  const ValueWithError eta = eta_completed(s, settings);
  const Complex poly = 0.5 * s * (s - 1.0);
  return {poly * eta.value, std::abs(poly) * eta.abs_err_est};
}

double big_xi(double t, const EvalSettings& settings) {
  const Complex v = xi_c(Complex{0.5, t}, settings).value;
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real()))) {
    throw SymmetryError("Xi(t) has a non-negligible imaginary residue at t = " + std::to_string(t));
  }
  return v.real();
}

double rho_real(double t, const EvalSettings& settings) {
  const Complex v = eta_completed(Complex{0.5, t}, settings).value;
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real()))) {
    throw SymmetryError("rho(t) has a non-negligible imaginary residue at t = " +
                        std::to_string(t));
  }
  return v.real();
}

ValueWithError onef1(Complex a, Complex b, Complex w, const EvalSettings& settings) {
  if (is_nonpositive_integer(b)) throw ParameterError("1F1: b is a nonpositive integer");
  if (w == Complex{0.0, 0.0}) return {Complex{1.0, 0.0}, 0.0};

  // Neumaier-compensated sums, real and imaginary parts kept separately.
  double sum_re = 1.0, comp_re = 0.0;
  double sum_im = 0.0, comp_im = 0.0;
  auto add = [](double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  };

  Complex term{1.0, 0.0};
  double max_mag = 1.0;
  int small_run = 0;
  double last_mag = 1.0;
  for (int n = 0; n < settings.max_terms(); ++n) {
    const double dn = n;
    const Complex ratio = (a + dn) * w / ((b + dn) * (dn + 1.0));
    term *= ratio;
    add(sum_re, comp_re, term.real());
    add(sum_im, comp_im, term.imag());
    const double mag = std::abs(term);
    last_mag = mag;
    const double partial = std::hypot(sum_re + comp_re, sum_im + comp_im);
    max_mag = std::max({max_mag, mag, partial});
    if (mag == 0.0) {
      small_run = 2;
    } else if (mag <= settings.rel_tol() * partial && std::abs(ratio) < 1.0) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 2) {
      const Complex value{sum_re + comp_re, sum_im + comp_im};
      if (!finite(value)) throw OverflowError("1F1 series overflowed");
      return {value, 2.0 * last_mag + 4.0 * kEps * max_mag};
    }
  }
  throw DivergenceError("1F1 series did not converge within max_terms");
}

double onef1_asym_residual(Complex s, Complex z, const EvalSettings& settings) {
  if (std::abs(s) < 4.0) throw DomainError("onef1_asym_residual requires |s| >= 4");
  const Complex z2 = z * z;
  const Complex series = onef1(-s, 0.5, 0.25 * z2, settings).value;
  const Complex shifted = s + 0.25;
  const Complex leading = std::exp(z2 / 8.0) * std::cos(z * std::sqrt(shifted));
  return std::abs(series - leading) * std::sqrt(std::abs(shifted));
}

}  // namespace vshift
