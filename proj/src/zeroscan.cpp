#include "vshift/zeroscan.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

#include "vshift/errors.hpp"

namespace vshift {
namespace {

constexpr double kOnNode = 1e-13;
constexpr int kMaxBisections = 200;

double evaluate(const Evaluator& f, double t) {
  double v = 0.0;
  try {
    v = f(t);
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(t, "evaluation failed at t = " + std::to_string(t) + ": " + e.what());
  }
  if (!std::isfinite(v)) {
    throw EvaluationError(t, "non-finite value at t = " + std::to_string(t));
  }
  return v;
}

// Brackets among the nodes grid[first..last], values already evaluated.
void collect(const std::vector<double>& grid, const std::vector<double>& values, std::size_t first,
             std::size_t last, std::vector<ZeroBracket>& out) {
  for (std::size_t k = first; k <= last; ++k) {
    if (std::abs(values[k]) < kOnNode) out.push_back({grid[k], grid[k], values[k], values[k]});
    if (k == last) break;
    const double a = values[k];
    const double b = values[k + 1];
    if (std::abs(a) < kOnNode || std::abs(b) < kOnNode) continue;
    if ((a < 0.0) != (b < 0.0)) out.push_back({grid[k], grid[k + 1], a, b});
  }
}

void sort_unique(std::vector<ZeroBracket>& v) {
  auto key_less = [](const ZeroBracket& x, const ZeroBracket& y) {
    return x.t_lo < y.t_lo || (x.t_lo == y.t_lo && x.t_hi < y.t_hi);
  };
  std::sort(v.begin(), v.end(), key_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const ZeroBracket& x, const ZeroBracket& y) {
                        return x.t_lo == y.t_lo && x.t_hi == y.t_hi;
                      }),
          v.end());
}

// Runs body(worker) on `workers` threads and rethrows the first failure in
// worker order.
template <typename Body>
void run_workers(int workers, Body body) {
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::vector<double> scan_grid(double t_lo, double t_hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ParameterError("scan step must be positive");
  if (!(t_lo < t_hi) || !std::isfinite(t_lo) || !std::isfinite(t_hi)) {
    throw ParameterError("scan range requires t_lo < t_hi");
  }
  const auto n = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 2);
  for (std::size_t k = 0; k <= n; ++k) grid.push_back(t_lo + static_cast<double>(k) * step);
  if (t_hi - grid.back() > 1e-9 * step) grid.push_back(t_hi);
  return grid;
}

std::vector<ZeroBracket> scan(double t_lo, double t_hi, double step, const Evaluator& f) {
  const std::vector<double> grid = scan_grid(t_lo, t_hi, step);
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = evaluate(f, grid[k]);
  std::vector<ZeroBracket> out;
  collect(grid, values, 0, grid.size() - 1, out);
  return out;
}

ZeroEstimate bisect(const ZeroBracket& b, const Evaluator& f, double tol) {
  if (!(tol > 0.0)) throw ParameterError("bisection tolerance must be positive");
  if (b.t_lo == b.t_hi) return {b.t_lo, std::abs(b.f_lo), 0};
  if (!(b.t_lo < b.t_hi) || !((b.f_lo < 0.0) != (b.f_hi < 0.0))) {
    throw ParameterError("bisect requires an ordered bracket with a sign change");
  }
  double lo = b.t_lo;
  double hi = b.t_hi;
  const bool lo_negative = b.f_lo < 0.0;
  int iterations = 0;
  while (hi - lo > tol) {
    if (iterations == kMaxBisections) {
      throw MaxIterError("bisection did not reach the tolerance in 200 iterations");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket is down to adjacent doubles
    const double fm = evaluate(f, mid);
    ++iterations;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    ((fm < 0.0) == lo_negative ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  return {t, std::abs(evaluate(f, t)), iterations};
}

ScanReport scan_fz(const ShiftConfig& cfg, double t_lo, double t_hi, double step, double tol,
                   int workers, const EvalSettings& settings) {
  if (workers < 1) throw ParameterError("workers must be at least 1");
  const ShiftConfig valid = validate_config(cfg);
  const Evaluator f = [&valid, &settings](double t) {
    return f_z_critical_scaled(t, valid, settings);
  };

  const std::vector<double> grid = scan_grid(t_lo, t_hi, step);
  const std::size_t intervals = grid.size() - 1;
  const auto chunks = static_cast<std::size_t>(
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(workers), intervals)));

  // Chunk c covers nodes [bounds[c], bounds[c + 1]]; neighbours share one node.
  std::vector<std::size_t> bounds(chunks + 1);
  for (std::size_t c = 0; c <= chunks; ++c) bounds[c] = c * intervals / chunks;

  std::vector<std::vector<ZeroBracket>> found(chunks);
  run_workers(static_cast<int>(chunks), [&](int w) {
    const std::size_t first = bounds[w];
    const std::size_t last = bounds[w + 1];
    std::vector<double> values(grid.size());
    for (std::size_t k = first; k <= last; ++k) values[k] = evaluate(f, grid[k]);
    collect(grid, values, first, last, found[w]);
  });

  ScanReport report;
  for (auto& part : found) report.brackets.insert(report.brackets.end(), part.begin(), part.end());
  sort_unique(report.brackets);

  report.zeros.resize(report.brackets.size());
  const int refine_workers =
      static_cast<int>(std::max<std::size_t>(1, std::min<std::size_t>(chunks, report.brackets.size())));
  run_workers(refine_workers, [&](int w) {
    for (std::size_t i = w; i < report.brackets.size(); i += refine_workers) {
      report.zeros[i] = bisect(report.brackets[i], f, tol);
    }
  });

  report.grid_step = step;
  report.t_lo = t_lo;
  report.t_hi = t_hi;
  report.config_digest = config_digest(valid, settings);
  return report;
}

std::string config_digest(const ShiftConfig& cfg, const EvalSettings& settings) {
  std::string text;
  auto add = [&text](const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.17g;", key, v);
    text += buf;
  };
  for (double c : cfg.coefficients) add("c", c);
  for (double l : cfg.shifts) add("l", l);
  add("z_re", cfg.z.real());
  add("z_im", cfg.z.imag());
  add("tail", cfg.tail_bound);
  add("rel_tol", settings.rel_tol());
  add("max_terms", settings.max_terms());
  add("em_terms", settings.em_terms());
  add("quad_abs_tol", settings.quad_abs_tol());

  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016" PRIx64, h);
  return out;
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << "t_lo,t_hi,t_zero,f_residual,iterations\n";
  for (std::size_t i = 0; i < report.brackets.size(); ++i) {
    const auto& b = report.brackets[i];
    const auto& z = report.zeros[i];
    out << fmt(b.t_lo) << ',' << fmt(b.t_hi) << ',' << fmt(z.t) << ',' << fmt(z.residual) << ','
        << z.iterations << '\n';
  }
}

void write_scan_json(std::ostream& out, const ScanReport& report, const EvalSettings& settings) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["subcommand"] = "scan";
  doc["config_digest"] = report.config_digest;
  doc["settings"] = {{"rel_tol", settings.rel_tol()},
                     {"max_terms", settings.max_terms()},
                     {"em_terms", settings.em_terms()},
                     {"quad_abs_tol", settings.quad_abs_tol()}};
  doc["range"] = {report.t_lo, report.t_hi};
  doc["grid_step"] = report.grid_step;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < report.brackets.size(); ++i) {
    const auto& b = report.brackets[i];
    const auto& z = report.zeros[i];
    rows.push_back({{"t_lo", b.t_lo},
                    {"t_hi", b.t_hi},
                    {"f_lo", b.f_lo},
                    {"f_hi", b.f_hi},
                    {"t_zero", z.t},
                    {"f_residual", z.residual},
                    {"iterations", z.iterations}});
  }
  doc["zeros"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace vshift
