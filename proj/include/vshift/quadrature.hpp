#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on a
// finite interval. Refinement always bisects the interval with the largest
// error estimate; ties go to the leftmost interval, so results are
// deterministic for a given integrand.

#include <functional>

#include "vshift/types.hpp"

namespace vshift {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Relative to |integral|.
  double rel_tol = 1e-12;
  int max_intervals = 200000;
  /// The range is first cut into pieces no wider than this.
  double initial_width = 4.0;
};

struct QuadratureResult {
  Complex value;
  double abs_err_est = 0.0;
  /// Upper limit actually used when the range was truncated from infinity.
  double truncation_T = 0.0;
  int evaluations = 0;
};

/// Throws ToleranceError if the interval budget runs out before the combined
/// tolerance max(abs_tol, rel_tol |I|, roundoff floor) is met.
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, double lo, double hi,
                                    const QuadratureOptions& options);

}  // namespace vshift
