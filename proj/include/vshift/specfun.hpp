#pragma once

// Complex special-function kernel: Gamma, zeta, the completed zeta
// eta(s) = pi^{-s/2} Gamma(s/2) zeta(s), Riemann's xi and Xi, rho(t) = eta(1/2+it),
// and the Kummer confluent hypergeometric function 1F1.

#include "vshift/types.hpp"

namespace vshift {

/// log Gamma(s) up to a multiple of 2*pi*i in the imaginary part; exp() of the
/// result is Gamma(s). Lanczos (15 coefficients) for Re(s) >= 1/2, reflection
/// below. Throws PoleError at the nonpositive integers.
Complex log_gamma(Complex s);

ValueWithError gamma_c(Complex s);

/// Riemann zeta by Euler-Maclaurin summation with Bernoulli corrections through
/// B_26; Re(s) < 0 goes through the functional equation.
ValueWithError zeta_c(Complex s, const EvalSettings& settings = {});

ValueWithError eta_completed(Complex s, const EvalSettings& settings = {});

/// exp(log_scale) * eta(s), computed without forming the (possibly under- or
/// overflowing) unscaled Gamma factor. Used by integrands that multiply the
/// exponentially decaying eta by an exponentially growing weight.
ValueWithError eta_completed_scaled(Complex s, double log_scale, const EvalSettings& settings = {});

/// Entire: the removable points s = 0, 1 return the limit 1/2.
ValueWithError xi_c(Complex s, const EvalSettings& settings = {});

/// Xi(t) = xi(1/2 + it); throws SymmetryError if the imaginary residue is not
/// negligible.
double big_xi(double t, const EvalSettings& settings = {});

/// rho(t) = eta(1/2 + it), real and even for real t.
double rho_real(double t, const EvalSettings& settings = {});

/// 1F1(a; b; w) by its Maclaurin series with compensated summation.
/// abs_err_est includes a cancellation term (largest partial sum times epsilon).
ValueWithError onef1(Complex a, Complex b, Complex w, const EvalSettings& settings = {});

/// |1F1(-s; 1/2; z^2/4) - e^{z^2/8} cos(z sqrt(s + 1/4))| * |s + 1/4|^{1/2},
/// the normalized remainder of the large-|s| asymptotic. Requires |s| >= 4.
double onef1_asym_residual(Complex s, Complex z, const EvalSettings& settings = {});

}  // namespace vshift
