#pragma once

// The vertically shifted combination
//   F_z(s) = sum_j c_j eta(s + i lambda_j) {1F1((1 - s - i lambda_j)/2; 1/2; z^2/4)
//                                         + 1F1((1 - conj(s) + i lambda_j)/2; 1/2; conj(z)^2/4)},
// its real form on the critical line, and the moment bookkeeping that shows
// F_z(1/2 + it) changes sign.

#include <vector>

#include "vshift/types.hpp"

namespace vshift {

struct ShiftConfig {
  std::vector<double> coefficients;
  std::vector<double> shifts;
  Complex z;
  /// Bound on sum |c_j| over terms not stored in the list.
  double tail_bound = 0.0;
  /// Index of the unique largest |lambda_j|; filled in by validate_config.
  int dominant_index = -1;
};

/// Throws ConfigError on empty or mismatched lists, a zero coefficient,
/// repeated shifts, z outside D, a negative tail bound, or a largest |lambda|
/// attained more than once.
ShiftConfig validate_config(ShiftConfig cfg);

ValueWithError f_z(Complex s, const ShiftConfig& cfg, const EvalSettings& settings = {});

/// 2 sum_j c_j rho(t + lambda_j) Re 1F1((1 - 2i(t + lambda_j))/4; 1/2; z^2/4).
/// Throws SymmetryError unless F_z(1/2 + it) agrees with this value and its
/// imaginary part is below 1e-9 (1 + |F_z|).
double f_z_critical(double t, const ShiftConfig& cfg, const EvalSettings& settings = {});

/// e^{pi |t| / 4} f_z_critical(t): same sign, no exponential decay. Used for
/// sign-change scanning.
double f_z_critical_scaled(double t, const ShiftConfig& cfg, const EvalSettings& settings = {});

/// i/2 - lambda = r e^{i theta}, theta in (0, pi).
struct PolarShift {
  double r = 0.0;
  double theta = 0.0;
};
PolarShift polar_shift(double lambda);

/// u + iv = 1 + e^{z^2/8} sinh(z^2/8) = w e^{i beta}, beta in [0, 2 pi).
struct MomentParams {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double beta = 0.0;
};
/// Throws DegenerateError when w < 1e-14.
MomentParams moment_params(Complex z);

/// -4 pi w sum_j c_j e^{-pi lambda_j / 4} r_j^{2m} cos(pi/8 + beta + 2 m theta_j),
/// the alpha -> pi/4 limit of moment_numeric.
double moment_closed_form(int m, const ShiftConfig& cfg);

/// sum_j c_j int t^{2m} e^{alpha t} rho(t + lambda_j) Re 1F1(...) dt, by quadrature.
double moment_numeric(int m, double alpha, const ShiftConfig& cfg,
                      const EvalSettings& settings = {});

/// The same moment assembled from the alpha-derivatives of the theta sum and the
/// explicit exponential term, without quadrature.
double moment_assembled(int m, double alpha, const ShiftConfig& cfg,
                        const EvalSettings& settings = {});

struct LimitCheck {
  double alpha_1 = 0.0;
  double value_1 = 0.0;
  double alpha_2 = 0.0;
  double value_2 = 0.0;
  double extrapolated = 0.0;
  double closed_form = 0.0;
  /// |extrapolated - closed_form| / (1 + |closed_form|).
  double discrepancy = 0.0;
};

/// moment_numeric at alpha_k = pi/4 - 10^{-k}, k = 1, 2, extrapolated linearly in
/// 10^{-k} to alpha = pi/4 and compared with moment_closed_form. m in {0, 1}.
LimitCheck moment_limit_check(int m, const ShiftConfig& cfg, const EvalSettings& settings = {});

}  // namespace vshift
