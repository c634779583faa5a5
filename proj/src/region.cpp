#include "vshift/region.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "vshift/errors.hpp"

namespace vshift {
namespace {

const double kHalfSide = std::sqrt(kPi / 2.0);
const double kSkew = std::sqrt(2.0 / kPi);

RegionLabel corner_label(double x) {
  if (std::abs(x) < kHalfSide) return RegionLabel::central_square;
  return x > 0.0 ? RegionLabel::lower_right : RegionLabel::upper_left;
}

RegionVerdict classify(double margin, RegionLabel inside_label) {
  if (std::abs(margin) < kRegionBoundaryBand) return {false, RegionLabel::boundary, margin};
  if (margin > 0.0) return {true, inside_label, margin};
  return {false, RegionLabel::outside, margin};
}

int node_count(double lo, double hi, double step) {
  return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::central_square: return "central_square";
    case RegionLabel::lower_right: return "lower_right";
    case RegionLabel::upper_left: return "upper_left";
    case RegionLabel::boundary: return "boundary";
    case RegionLabel::outside: return "outside";
  }
  return "outside";
}

double region_half_side() { return kHalfSide; }

RegionVerdict in_D_inequality(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double margin = kHalfSide - kSkew * x * y - std::abs(x - y);
  return classify(margin, corner_label(x));
}

RegionVerdict in_D_decomposition(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double c = kHalfSide;
  const double central = std::min(c - std::abs(x), c - std::abs(y));
  const double lower_right = std::min(x - c, -c - y);
  const double upper_left = std::min(-c - x, y - c);
  double margin = central;
  RegionLabel label = RegionLabel::central_square;
  if (lower_right > margin) {
    margin = lower_right;
    label = RegionLabel::lower_right;
  }
  if (upper_left > margin) {
    margin = upper_left;
    label = RegionLabel::upper_left;
  }
  return classify(margin, label);
}

bool in_region(Complex z) { return in_D_inequality(z).inside; }

std::vector<GridNode> region_grid(double x_min, double x_max, double y_min, double y_max,
                                  double step, int workers) {
  if (!(step > 0.0)) throw ParameterError("region_grid: step must be positive");
  if (!(x_min < x_max) || !(y_min < y_max)) throw ParameterError("region_grid: empty range");
  if (workers < 1) throw ParameterError("region_grid: workers must be >= 1");

  const int nx = node_count(x_min, x_max, step);
  const int ny = node_count(y_min, y_max, step);
  std::vector<GridNode> nodes(static_cast<std::size_t>(nx) * ny);
  std::vector<std::string> failures(workers);

  auto classify_rows = [&](int worker) {
    for (int j = worker; j < ny; j += workers) {
      const double y = y_min + j * step;
      for (int i = 0; i < nx; ++i) {
        const Complex z{x_min + i * step, y};
        const RegionVerdict ineq = in_D_inequality(z);
        const RegionVerdict dec = in_D_decomposition(z);
        if (std::abs(ineq.margin) > 1e-9 && ineq.inside != dec.inside && failures[worker].empty()) {
          failures[worker] = "membership tests disagree at z = " + std::to_string(z.real()) +
                             (z.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(z.imag())) + "i";
        }
        nodes[static_cast<std::size_t>(j) * nx + i] = {z, ineq};
      }
    }
  };

  if (workers == 1) {
    classify_rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(classify_rows, w);
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw ConsistencyError(f);
  }
  return nodes;
}

}  // namespace vshift
