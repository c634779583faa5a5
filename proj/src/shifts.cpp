#include "vshift/shifts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vshift/errors.hpp"
#include "vshift/integral.hpp"
#include "vshift/region.hpp"
#include "vshift/specfun.hpp"

namespace vshift {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kResidueTol = 1e-9;

void require_shifts_valid(const ShiftConfig& cfg) {
  if (cfg.dominant_index < 0) {
    throw ConfigError("shift configuration has not been validated");
  }
}

struct CriticalTerms {
  double real_form = 0.0;
  Complex full;
};

// Both the real critical-line form and the full complex F_z(1/2 + it), from a
// single eta evaluation per shift.
CriticalTerms critical_terms(double t, double log_scale, const ShiftConfig& cfg,
                             const EvalSettings& settings) {
  const Complex w = 0.25 * cfg.z * cfg.z;
  const Complex w_bar = std::conj(w);
  CriticalTerms out;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    const double u = t + cfg.shifts[j];
    const Complex eta = eta_completed_scaled(Complex{0.5, u}, log_scale, settings).value;
    const Complex first = onef1(Complex{0.25, -0.5 * u}, 0.5, w, settings).value;
    const Complex second = onef1(Complex{0.25, 0.5 * u}, 0.5, w_bar, settings).value;
    out.real_form += 2.0 * cfg.coefficients[j] * eta.real() * first.real();
    out.full += cfg.coefficients[j] * eta * (first + second);
  }
  const double scale = 1.0 + std::abs(out.full);
  if (std::abs(out.full.imag()) > kResidueTol * scale) {
    throw SymmetryError("F_z(1/2 + it) has imaginary residue " +
                        std::to_string(out.full.imag()) + " at t = " + std::to_string(t));
  }
  if (std::abs(out.full.real() - out.real_form) > kResidueTol * scale) {
    throw SymmetryError("critical-line real form disagrees with F_z at t = " + std::to_string(t));
  }
  return out;
}

}  // namespace

ShiftConfig validate_config(ShiftConfig cfg) {
  if (cfg.coefficients.empty()) throw ConfigError("configuration has no coefficients");
  if (cfg.coefficients.size() != cfg.shifts.size()) {
    throw ConfigError("coefficients and shifts have different lengths");
  }
  for (std::size_t j = 0; j < cfg.coefficients.size(); ++j) {
    if (!std::isfinite(cfg.coefficients[j]) || !std::isfinite(cfg.shifts[j])) {
      throw ConfigError("coefficients and shifts must be finite");
    }
    if (cfg.coefficients[j] == 0.0) {
      throw ConfigError("coefficient " + std::to_string(j) + " is zero");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (cfg.shifts[k] == cfg.shifts[j]) {
        throw ConfigError("shift " + std::to_string(cfg.shifts[j]) + " is repeated");
      }
    }
  }
  if (!(cfg.tail_bound >= 0.0) || !std::isfinite(cfg.tail_bound)) {
    throw ConfigError("tail_bound must be a finite nonnegative number");
  }
  if (!in_region(cfg.z)) {
    throw ConfigError("z = (" + std::to_string(cfg.z.real()) + ", " + std::to_string(cfg.z.imag()) +
                      ") fails the region check: not inside D");
  }
  int best = 0;
  int count = 0;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    const double mag = std::abs(cfg.shifts[j]);
    if (mag > std::abs(cfg.shifts[best])) {
      best = static_cast<int>(j);
      count = 1;
    } else if (mag == std::abs(cfg.shifts[best])) {
      ++count;
    }
  }
  if (count != 1) throw ConfigError("the largest |shift| is attained more than once");
  cfg.dominant_index = best;
  return cfg;
}

ValueWithError f_z(Complex s, const ShiftConfig& cfg, const EvalSettings& settings) {
  require_shifts_valid(cfg);
  const Complex w = 0.25 * cfg.z * cfg.z;
  const Complex w_bar = std::conj(w);
  Complex total;
  double err = 0.0;
  double largest = 0.0;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    const Complex shifted = s + kI * cfg.shifts[j];
    if (shifted == Complex{0.0, 0.0} || shifted == Complex{1.0, 0.0}) {
      throw PoleError("shifted argument hits a pole of eta");
    }
    const ValueWithError eta = eta_completed(shifted, settings);
    const ValueWithError first = onef1(0.5 * (1.0 - shifted), 0.5, w, settings);
    const ValueWithError second =
        onef1(0.5 * (1.0 - std::conj(s) + kI * cfg.shifts[j]), 0.5, w_bar, settings);
    const Complex bracket = first.value + second.value;
    const double c = cfg.coefficients[j];
    total += c * eta.value * bracket;
    err += std::abs(c) * (eta.abs_err_est * std::abs(bracket) +
                          std::abs(eta.value) * (first.abs_err_est + second.abs_err_est));
    largest = std::max(largest, std::abs(eta.value * bracket));
  }
  return {total, err + cfg.tail_bound * largest};
}

double f_z_critical(double t, const ShiftConfig& cfg, const EvalSettings& settings) {
  require_shifts_valid(cfg);
  return critical_terms(t, 0.0, cfg, settings).real_form;
}

double f_z_critical_scaled(double t, const ShiftConfig& cfg, const EvalSettings& settings) {
  require_shifts_valid(cfg);
  return critical_terms(t, 0.25 * kPi * std::abs(t), cfg, settings).real_form;
}

PolarShift polar_shift(double lambda) {
  return {std::hypot(lambda, 0.5), std::atan2(0.5, -lambda)};
}

MomentParams moment_params(Complex z) {
  const Complex q = z * z / 8.0;
  const Complex e = std::exp(q) * std::sinh(q);
  MomentParams p;
  p.u = 1.0 + e.real();
  p.v = e.imag();
  p.w = std::hypot(p.u, p.v);
  if (p.w < 1e-14) throw DegenerateError("1 + e^{z^2/8} sinh(z^2/8) vanishes");
  p.beta = std::atan2(p.v, p.u);
  if (p.beta < 0.0) p.beta += 2.0 * kPi;
  return p;
}

double moment_closed_form(int m, const ShiftConfig& cfg) {
  if (m < 0) throw DomainError("moment order must be nonnegative");
  require_shifts_valid(cfg);
  const MomentParams p = moment_params(cfg.z);
  double sum = 0.0;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    const PolarShift ps = polar_shift(cfg.shifts[j]);
    sum += cfg.coefficients[j] * std::exp(-0.25 * kPi * cfg.shifts[j]) * std::pow(ps.r, 2 * m) *
           std::cos(kPi / 8.0 + p.beta + 2.0 * m * ps.theta);
  }
  return -4.0 * kPi * p.w * sum;
}

double moment_numeric(int m, double alpha, const ShiftConfig& cfg, const EvalSettings& settings) {
  require_shifts_valid(cfg);
  double sum = 0.0;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    sum += cfg.coefficients[j] * moment_integral_single(m, alpha, cfg.shifts[j], cfg.z, settings);
  }
  return sum;
}

double moment_assembled(int m, double alpha, const ShiftConfig& cfg, const EvalSettings& settings) {
  require_shifts_valid(cfg);
  double sum = 0.0;
  for (std::size_t j = 0; j < cfg.shifts.size(); ++j) {
    sum += cfg.coefficients[j] * moment_integral_rhs(m, alpha, cfg.shifts[j], cfg.z, settings).real();
  }
  return sum;
}

LimitCheck moment_limit_check(int m, const ShiftConfig& cfg, const EvalSettings& settings) {
  if (m != 0 && m != 1) throw DomainError("moment_limit_check supports m in {0, 1}");
  LimitCheck out;
  const double eps_1 = 1e-1;
  const double eps_2 = 1e-2;
  out.alpha_1 = kPi / 4.0 - eps_1;
  out.alpha_2 = kPi / 4.0 - eps_2;
  out.value_1 = moment_numeric(m, out.alpha_1, cfg, settings);
  out.value_2 = moment_numeric(m, out.alpha_2, cfg, settings);
  out.extrapolated = out.value_2 - (out.value_1 - out.value_2) * eps_2 / (eps_1 - eps_2);
  out.closed_form = moment_closed_form(m, cfg);
  out.discrepancy = std::abs(out.extrapolated - out.closed_form) / (1.0 + std::abs(out.closed_form));
  return out;
}

}  // namespace vshift
