#pragma once

#include <complex>

namespace vshift {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Precision and truncation policy shared by every series and quadrature.
/// Immutable once constructed; the constructor rejects invalid policies.
class EvalSettings {
 public:
  EvalSettings() = default;
  EvalSettings(double rel_tol, int max_terms, int em_terms, double quad_abs_tol);

  double rel_tol() const { return rel_tol_; }
  int max_terms() const { return max_terms_; }
  /// Minimum direct-sum length used by the Euler-Maclaurin zeta evaluator.
  int em_terms() const { return em_terms_; }
  double quad_abs_tol() const { return quad_abs_tol_; }

  EvalSettings with_rel_tol(double v) const;
  EvalSettings with_max_terms(int v) const;
  EvalSettings with_quad_abs_tol(double v) const;

 private:
  double rel_tol_ = 1e-12;
  int max_terms_ = 10000;
  int em_terms_ = 20;
  double quad_abs_tol_ = 1e-10;
};

/// A value together with an upper estimate of the truncation error incurred.
struct ValueWithError {
  Complex value;
  double abs_err_est = 0.0;
};

}  // namespace vshift
