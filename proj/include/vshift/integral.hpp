#pragma once

// The confluent-hypergeometric kernel mu, its symmetrization nabla, the
// Xi-integral that equals both sides of the generalized theta transformation,
// and the shifted moment integrals of rho(t + lambda) 1F1(...).

#include "vshift/quadrature.hpp"
#include "vshift/types.hpp"

namespace vshift {

/// x^{1/2 - s} e^{-z^2/8} 1F1((1 - s)/2; 1/2; z^2/4), principal power.
Complex mu(Complex x, Complex z, Complex s, const EvalSettings& settings = {});

/// mu(x, z, s) + mu(x, z, 1 - s).
Complex nabla(Complex x, Complex z, Complex s, const EvalSettings& settings = {});

/// Smallest T >= floor past the peak with t^power e^{rate t + growth sqrt(t)} <= bound.
/// rate must be negative.
double truncation_point(double power, double rate, double growth, double bound, double floor);

/// (1/pi) int_0^inf Xi(t/2)/(1 + t^2) nabla(a, z, (1 + it)/2) dt.
/// Requires 0.5 <= |a| <= 2, |arg a| <= pi/4 - 0.01, z in D with |z| <= 1.5.
QuadratureResult xi_integral(Complex a, Complex z, const EvalSettings& settings = {});

/// max(|I - theta_side_a(a, z)|, |I - theta_side_b(1/a, z)|) with I = xi_integral(a, z).
double xi_integral_residual(Complex a, Complex z, const EvalSettings& settings = {});

/// int_{-inf}^{inf} t^{2m} e^{alpha t} rho(t + lambda) 1F1((1 - 2i(t + lambda))/4; 1/2; z^2/4) dt
/// Requires m in {0, 1, 2}, |alpha| <= pi/4 - 0.01, z in D with |z| <= 1.
QuadratureResult moment_integral(int m, double alpha, double lambda, Complex z,
                                 const EvalSettings& settings = {});

/// Real part of moment_integral.
double moment_integral_single(int m, double alpha, double lambda, Complex z,
                              const EvalSettings& settings = {});

/// The closed form the moment integral equals:
/// -4 pi e^{-alpha lambda} r^{2m} cos(alpha/2 + 2 m theta) + 4 pi e^{z^2/8} d^{2m}/d alpha^{2m} psi1,
/// where i/2 - lambda = r e^{i theta}.
Complex moment_integral_rhs(int m, double alpha, double lambda, Complex z,
                            const EvalSettings& settings = {});

}  // namespace vshift
