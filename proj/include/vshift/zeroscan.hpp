#pragma once

// Sign-change detection on a uniform grid with bisection refinement, and the
// parallel scan of F_z on the critical line.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "vshift/shifts.hpp"
#include "vshift/types.hpp"

namespace vshift {

using Evaluator = std::function<double(double)>;

/// A sign change between t_lo and t_hi, or a grid node where |f| < 1e-13
/// (then t_lo == t_hi).
struct ZeroBracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

struct ZeroEstimate {
  double t = 0.0;
  /// |f(t)| of the scanned function.
  double residual = 0.0;
  int iterations = 0;
};

struct ScanReport {
  std::vector<ZeroBracket> brackets;
  std::vector<ZeroEstimate> zeros;  // zeros[i] refines brackets[i]
  double grid_step = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::string config_digest;
};

/// Grid nodes t_lo + k step for k = 0, 1, ..., plus t_hi if it is not a node.
std::vector<double> scan_grid(double t_lo, double t_hi, double step);

/// Evaluator failures surface as EvaluationError carrying the abscissa.
std::vector<ZeroBracket> scan(double t_lo, double t_hi, double step, const Evaluator& f);

/// Bisects until the bracket is no wider than tol and returns its midpoint.
/// Throws MaxIterError after 200 halvings.
ZeroEstimate bisect(const ZeroBracket& b, const Evaluator& f, double tol);

/// Scans the positively rescaled e^{pi|t|/4} F_z(1/2 + it), which has the same
/// zeros. The grid is split into `workers` chunks sharing their end nodes, so
/// the merged report does not depend on the worker count.
ScanReport scan_fz(const ShiftConfig& cfg, double t_lo, double t_hi, double step, double tol,
                   int workers, const EvalSettings& settings = {});

/// 16 hex digits (FNV-1a) over the configuration and settings.
std::string config_digest(const ShiftConfig& cfg, const EvalSettings& settings);

/// Columns t_lo, t_hi, t_zero, f_residual, iterations.
void write_scan_csv(std::ostream& out, const ScanReport& report);
void write_scan_json(std::ostream& out, const ScanReport& report, const EvalSettings& settings);

}  // namespace vshift
