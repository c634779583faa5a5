#include "vshift/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "vshift/errors.hpp"

namespace vshift {
namespace {

// Kronrod abscissae (descending) with Kronrod weights; Gauss weights belong to
// the odd-indexed abscissae 1, 3, 5 and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Piece {
  double lo;
  double hi;
  Complex value;
  double err;
  double abs_mass;  // integral of |f| estimate
};

Piece gauss_kronrod(const std::function<Complex(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = f(centre);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  double mass = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(centre - dx);
    const Complex f2 = f(centre + dx);
    kronrod += (f1 + f2) * kWgk[j];
    mass += (std::abs(f1) + std::abs(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  mass *= std::abs(half);
  const double err = std::max(std::abs(kronrod - gauss), 50.0 * kEps * mass);
  return {lo, hi, kronrod, err, mass};
}

struct WorstFirst {
  bool operator()(const Piece& a, const Piece& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.lo > b.lo;
  }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, double lo, double hi,
                                    const QuadratureOptions& options) {
  if (!(hi > lo)) return {Complex{}, 0.0, hi, 0};
  const int initial =
      std::max(1, static_cast<int>(std::ceil((hi - lo) / std::max(options.initial_width, 1e-300))));
  std::priority_queue<Piece, std::vector<Piece>, WorstFirst> queue;
  std::vector<Piece> settled;
  int evaluations = 0;
  Complex total{};
  double total_err = 0.0;
  double total_mass = 0.0;
  for (int k = 0; k < initial; ++k) {
    const double a = lo + (hi - lo) * k / initial;
    const double b = k + 1 == initial ? hi : lo + (hi - lo) * (k + 1) / initial;
    Piece p = gauss_kronrod(f, a, b);
    evaluations += 15;
    total += p.value;
    total_err += p.err;
    total_mass += p.abs_mass;
    queue.push(p);
  }

  auto target = [&] {
    return std::max({options.abs_tol, options.rel_tol * std::abs(total), 100.0 * kEps * total_mass});
  };

  int intervals = initial;
  while (total_err > target()) {
    if (queue.empty()) break;
    Piece worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) || intervals >= options.max_intervals) {
      throw ToleranceError("adaptive quadrature exhausted its budget with error estimate " +
                           std::to_string(total_err) + " above target " + std::to_string(target()));
    }
    const Piece left = gauss_kronrod(f, worst.lo, mid);
    const Piece right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    ++intervals;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    total_mass += left.abs_mass + right.abs_mass - worst.abs_mass;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in left-to-right order so the result does not depend on the
  // refinement history's rounding.
  while (!queue.empty()) {
    settled.push_back(queue.top());
    queue.pop();
  }
  std::sort(settled.begin(), settled.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  Complex sum{};
  double err = 0.0;
  for (const Piece& p : settled) {
    sum += p.value;
    err += p.err;
  }
  return {sum, err, hi, evaluations};
}

}  // namespace vshift
