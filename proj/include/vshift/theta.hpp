#pragma once

// Jacobi theta sums psi(x) = sum_{n>=1} e^{-pi n^2 x} and the generalized
// psi(x, z) = sum_{n>=1} e^{-pi n^2 x} cos(sqrt(pi x) n z), their modular
// transformations, and the boundary behaviour of psi near x = i.

#include <span>
#include <vector>

#include "vshift/types.hpp"

namespace vshift {

struct ThetaEval {
  Complex value;
  int terms_used = 0;
  /// Bound on the dropped tail (geometric majorant).
  double abs_err_est = 0.0;
};

ThetaEval psi_classical(double x, const EvalSettings& settings = {});

/// Direct summation; requires Re(x) > 0. sqrt(pi x) is the principal root.
ThetaEval psi_general(Complex x, Complex z, const EvalSettings& settings = {});

/// |sqrt(x)(2 psi(x) + 1) - (2 psi(1/x) + 1)|.
double jacobi_residual(double x, const EvalSettings& settings = {});

/// sqrt(a) (e^{-z^2/8}/(2a) - e^{z^2/8} sum e^{-pi a^2 n^2} cos(sqrt(pi) a n z)).
/// Requires Re(a) > 0 and Re(a^2) > 0.
Complex theta_side_a(Complex a, Complex z, const EvalSettings& settings = {});

/// sqrt(b) (e^{z^2/8}/(2b) - e^{-z^2/8} sum e^{-pi b^2 n^2} cosh(sqrt(pi) b n z)).
Complex theta_side_b(Complex b, Complex z, const EvalSettings& settings = {});

/// |theta_side_a(a, z) - theta_side_b(1/a, z)|.
double general_theta_residual(Complex a, Complex z, const EvalSettings& settings = {});

/// Absolute residual of
/// psi(x, z) = e^{-z^2/4}/sqrt(x) psi(1/x, iz) + e^{-z^2/4}/(2 sqrt(x)) - 1/2.
double psi_xz_transform_residual(Complex x, Complex z, const EvalSettings& settings = {});

/// e^{(i/2 - lambda) alpha} (e^{-z^2/8}/2 + e^{z^2/8} psi(e^{2 i alpha}, z)),
/// for -pi/4 < alpha < pi/4.
Complex psi1(double alpha, Complex z, double lambda, const EvalSettings& settings = {});

/// The order-th alpha-derivative of psi1 (0 <= order <= 4), obtained by exact
/// Taylor-jet differentiation of every term of the series. Near alpha = pi/4 the
/// theta sum is taken in its transformed even/odd split form around x = i.
Complex psi1_alpha_derivative(double alpha, Complex z, double lambda, int order,
                              const EvalSettings& settings = {});

/// The two vanishing expressions of the split of psi(i + delta, z):
/// quarter: delta^{-1/2} e^{-(z^2/4)(1 + i/delta)} psi(1/(4 delta), i z sqrt(1 + i/delta))
/// unit:    the same with psi(1/delta, .)
enum class SplitForm { quarter, unit };

Complex split_expression(Complex z, Complex delta, SplitForm form,
                           const EvalSettings& settings = {});

/// |split_expression| along the given positive deltas (strictly decreasing).
/// Requires z inside the region D (RegionError otherwise).
std::vector<double> split_decay(Complex z, std::span<const double> deltas,
                                  SplitForm form = SplitForm::quarter,
                                  const EvalSettings& settings = {});

/// Same along complex deltas with Re(delta) > 0, e.g. a ray arg(delta) = pi/4.
std::vector<double> split_decay(Complex z, std::span<const Complex> deltas,
                                  SplitForm form = SplitForm::quarter,
                                  const EvalSettings& settings = {});

/// e^{-z^2/8}/2 + e^{z^2/8} psi(i + delta, z), with psi(i + delta, z) taken from
/// the transformed split 2 psi(4 delta, w) - psi(delta, w). Tends to
/// -sinh(z^2/8) as delta -> 0 for z in D.
Complex psi_near_i(Complex z, double delta, const EvalSettings& settings = {});

}  // namespace vshift
