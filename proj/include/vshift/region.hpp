#pragma once

// The open region D = { z : |Re z - Im z| < sqrt(pi/2) - sqrt(2/pi) Re z Im z }
// and its decomposition into a central open square plus two opposite corners.

#include <string_view>
#include <utility>
#include <vector>

#include "vshift/types.hpp"

namespace vshift {

enum class RegionLabel { central_square, lower_right, upper_left, boundary, outside };

std::string_view to_string(RegionLabel label);

struct RegionVerdict {
  bool inside = false;
  RegionLabel label = RegionLabel::outside;
  /// Signed slack of the defining condition; positive inside.
  double margin = 0.0;

  friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

/// Points with |margin| below this are labelled boundary and are not inside.
inline constexpr double kRegionBoundaryBand = 1e-12;

/// Half side of the central square, sqrt(pi/2).
double region_half_side();

/// Verdict from the defining inequality; margin = RHS - LHS.
RegionVerdict in_D_inequality(Complex z);

/// Verdict from explicit membership in the union of the three sets; margin is
/// the signed slack of the nearest set's bounds.
RegionVerdict in_D_decomposition(Complex z);

/// Shorthand for in_D_inequality(z).inside.
bool in_region(Complex z);

struct GridNode {
  Complex z;
  RegionVerdict verdict;
};

/// Classifies every node of the grid x_min + i*step, y_min + j*step (row-major,
/// rows of constant y). Both membership tests must agree on every node whose
/// inequality margin exceeds 1e-9, otherwise ConsistencyError is raised.
std::vector<GridNode> region_grid(double x_min, double x_max, double y_min, double y_max,
                                  double step, int workers = 1);

}  // namespace vshift
