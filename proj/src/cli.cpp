#include "vshift/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vshift/config.hpp"
#include "vshift/integral.hpp"
#include "vshift/region.hpp"
#include "vshift/shifts.hpp"
#include "vshift/specfun.hpp"
#include "vshift/theta.hpp"
#include "vshift/zeroscan.hpp"

namespace vshift {
namespace {

using nlohmann::ordered_json;
using Cell = std::variant<std::string, double, long long, bool>;

constexpr std::uint64_t kSweepSeed = 20240611;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  ordered_json summary = ordered_json::object();
  int failures = 0;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

ordered_json json_cell(const Cell& c) {
  return std::visit([](const auto& v) { return ordered_json(v); }, c);
}

ordered_json settings_json(const EvalSettings& s) {
  return {{"rel_tol", s.rel_tol()},
          {"max_terms", s.max_terms()},
          {"em_terms", s.em_terms()},
          {"quad_abs_tol", s.quad_abs_tol()}};
}

void write_table(std::ostream& out, const Table& table, const RunManifest& manifest) {
  if (manifest.output_format == OutputFormat::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["subcommand"] = std::string(to_string(manifest.subcommand));
  doc["settings"] = settings_json(manifest.settings);
  doc["summary"] = table.summary;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

ShiftConfig load_config(const RunManifest& manifest) {
  if (manifest.config_path.empty()) {
    throw ConfigError(std::string(to_string(manifest.subcommand)) + " requires --config");
  }
  return parse_config(manifest.config_path);
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Table run_eval(const RunManifest& manifest) {
  const ShiftConfig cfg = load_config(manifest);
  const double t_min = manifest.t_min.value_or(0.0);
  const double t_max = manifest.t_max.value_or(40.0);
  const double step = manifest.step.value_or(0.5);
  Table table;
  table.columns = {"t", "f_z", "imag_residue", "abs_err_est"};
  for (double t : scan_grid(t_min, t_max, step)) {
    const double real_form = f_z_critical(t, cfg, manifest.settings);
    const ValueWithError full = f_z(Complex{0.5, t}, cfg, manifest.settings);
    table.add({t, real_form, std::abs(full.value.imag()), full.abs_err_est});
  }
  table.summary["points"] = static_cast<long long>(table.rows.size());
  return table;
}

struct CheckRow {
  std::string check;
  Complex p1;
  Complex p2;
  double residual;
  double tolerance;
};

Table run_theta_check(const RunManifest& manifest) {
  const EvalSettings& s = manifest.settings;
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(kSweepSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto in_disk = [&](double radius) {
    const double r = radius * std::sqrt(unit(rng));
    const double phi = 2.0 * kPi * unit(rng);
    return std::polar(r, phi);
  };

  for (int k = 0; k < 50; ++k) {
    const double x = 0.1 * std::pow(100.0, k / 49.0);
    rows.push_back({"jacobi", x, 0.0, jacobi_residual(x, s), 1e-12});
  }
  for (int k = 0; k < 50; ++k) {
    Complex a;
    if (k < 10) {
      a = std::polar(1.0, -0.6 + 1.2 * unit(rng));
    } else {
      do {
        a = std::polar(0.6 + 1.1 * unit(rng), -0.7 + 1.4 * unit(rng));
      } while ((a * a).real() <= 0.05);
    }
    const Complex z = in_disk(1.5);
    rows.push_back({"general_theta", a, z, general_theta_residual(a, z, s), 1e-9});
  }
  for (int k = 0; k < 20; ++k) {
    const Complex x = std::polar(0.5 + 1.5 * unit(rng), -0.6 + 1.2 * unit(rng));
    const Complex z = in_disk(1.5);
    rows.push_back({"psi_xz_transform", x, z, psi_xz_transform_residual(x, z, s), 1e-9});
  }
  for (int k = 0; k < 200; ++k) {
    const Complex sv{0.2 + 0.6 * unit(rng), -30.0 + 60.0 * unit(rng)};
    const Complex left = eta_completed(sv, s).value;
    const Complex right = eta_completed(1.0 - sv, s).value;
    const double rel = std::abs(left - right) / std::max(1.0, std::abs(left));
    rows.push_back({"functional_equation", sv, 0.0, rel, 1e-9});
  }

  Table table;
  table.columns = {"check", "p1_re", "p1_im", "p2_re", "p2_im", "residual", "tolerance", "pass"};
  double worst = 0.0;
  for (const auto& r : rows) {
    const bool pass = r.residual < r.tolerance;
    table.failures += pass ? 0 : 1;
    worst = std::max(worst, r.residual);
    table.add({r.check, r.p1.real(), r.p1.imag(), r.p2.real(), r.p2.imag(), r.residual, r.tolerance,
               pass});
  }
  table.summary["checks"] = static_cast<long long>(rows.size());
  table.summary["failures"] = table.failures;
  table.summary["max_residual"] = worst;
  return table;
}

Table run_integral_check(const RunManifest& manifest) {
  const double tolerance = 1e-6;
  const Complex as[] = {1.0, 1.2, std::polar(1.0, 0.2)};
  const Complex zs[] = {0.0, Complex{0.4, 0.1}, Complex{0.5, -0.2}};
  Table table;
  table.columns = {"a_re",        "a_im",      "z_re",      "z_im",   "integral_re",
                   "integral_im", "residual_a", "residual_b", "abs_err_est", "pass"};
  for (Complex a : as) {
    for (Complex z : zs) {
      const QuadratureResult q = xi_integral(a, z, manifest.settings);
      const double ra = std::abs(q.value - theta_side_a(a, z, manifest.settings));
      const double rb = std::abs(q.value - theta_side_b(1.0 / a, z, manifest.settings));
      const bool pass = ra < tolerance && rb < tolerance;
      table.failures += pass ? 0 : 1;
      table.add({a.real(), a.imag(), z.real(), z.imag(), q.value.real(), q.value.imag(), ra, rb,
                 q.abs_err_est, pass});
    }
  }
  table.summary["tolerance"] = tolerance;
  table.summary["failures"] = table.failures;
  return table;
}

Table run_region(const RunManifest& manifest) {
  const double e = manifest.extent;
  const double step = manifest.step.value_or(0.05);
  if (!(e > 0.0)) throw ConfigError("--extent must be positive");
  const std::vector<GridNode> grid = region_grid(-e, e, -e, e, step, manifest.workers);

  Table table;
  table.columns = {"x", "y", "inside", "label", "margin"};
  long long inside = 0;
  for (const auto& node : grid) {
    inside += node.verdict.inside ? 1 : 0;
    table.add({node.z.real(), node.z.imag(), node.verdict.inside,
               std::string(to_string(node.verdict.label)), node.verdict.margin});
  }

  // Both membership tests on random points away from the boundary.
  std::mt19937_64 rng(kSweepSeed);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  long long tested = 0;
  long long disagreements = 0;
  for (int k = 0; k < 100000; ++k) {
    const Complex z{coord(rng), coord(rng)};
    const RegionVerdict a = in_D_inequality(z);
    if (std::abs(a.margin) < 1e-9) continue;
    ++tested;
    if (a.inside != in_D_decomposition(z).inside) ++disagreements;
  }
  table.failures = static_cast<int>(disagreements);
  table.summary["grid_nodes"] = static_cast<long long>(grid.size());
  table.summary["inside_nodes"] = inside;
  table.summary["random_points_tested"] = tested;
  table.summary["random_disagreements"] = disagreements;
  return table;
}

double identity_tolerance(int m) { return m == 0 ? 1e-5 : m == 1 ? 1e-4 : 1e-3; }

Table run_moments(const RunManifest& manifest) {
  const ShiftConfig cfg = load_config(manifest);
  const int m = manifest.m.value_or(0);
  if (m < 0 || m > 2) throw ConfigError("--m must be 0, 1 or 2");
  const double alpha = manifest.alpha.value_or(0.2);

  Table table;
  table.columns = {"kind", "m", "alpha", "numeric", "reference", "residual", "tolerance", "pass"};
  const double numeric = moment_numeric(m, alpha, cfg, manifest.settings);
  const double assembled = moment_assembled(m, alpha, cfg, manifest.settings);
  const double residual = std::abs(numeric - assembled);
  const double tol = identity_tolerance(m);
  table.failures += residual < tol ? 0 : 1;
  table.add({std::string("identity"), static_cast<long long>(m), alpha, numeric, assembled, residual,
             tol, residual < tol});

  if (!manifest.skip_limit && m <= 1) {
    const LimitCheck lc = moment_limit_check(m, cfg, manifest.settings);
    const double limit_tol = m == 0 ? 5e-3 : 2e-2;
    const bool pass = lc.discrepancy < limit_tol;
    table.failures += pass ? 0 : 1;
    table.add({std::string("limit"), static_cast<long long>(m), kPi / 4.0, lc.extrapolated,
               lc.closed_form, lc.discrepancy, limit_tol, pass});
    table.summary["limit_alpha_1"] = lc.alpha_1;
    table.summary["limit_value_1"] = lc.value_1;
    table.summary["limit_alpha_2"] = lc.alpha_2;
    table.summary["limit_value_2"] = lc.value_2;
  }
  table.summary["failures"] = table.failures;
  return table;
}

Table run_limits(const RunManifest& manifest) {
  const EvalSettings& s = manifest.settings;
  Table table;
  table.columns = {"check", "z_re", "z_im", "m", "lambda", "parameter", "value", "sequence_pass"};

  const std::vector<double> deltas = {0.2, 0.1, 0.05, 0.02, 0.01};
  const Complex decay_z[] = {0.0, Complex{0.5, 0.2}, Complex{1.0, 0.5}};
  for (Complex z : decay_z) {
    for (SplitForm form : {SplitForm::quarter, SplitForm::unit}) {
      const std::vector<double> values = split_decay(z, deltas, form, s);
      const bool pass = strictly_decreasing(values) && values.back() < 1e-8;
      table.failures += pass ? 0 : 1;
      const std::string name = form == SplitForm::quarter ? "split_quarter" : "split_unit";
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        table.add({name, z.real(), z.imag(), 0LL, 0.0, deltas[i], values[i], pass});
      }
    }
  }

  const Complex limit_z[] = {0.4, Complex{0.4, 0.1}};
  for (int m : {0, 1}) {
    for (double lambda : {0.0, 0.3}) {
      for (Complex z : limit_z) {
        const Complex target = -std::pow(Complex{-lambda, 0.5}, 2 * m) *
                               std::exp(0.25 * kPi * Complex{-lambda, 0.5}) * std::sinh(z * z / 8.0);
        std::vector<double> alphas;
        std::vector<double> values;
        for (int k = 1; k <= 3; ++k) {
          const double alpha = kPi / 4.0 - std::pow(10.0, -k);
          alphas.push_back(alpha);
          values.push_back(std::abs(psi1_alpha_derivative(alpha, z, lambda, 2 * m, s) - target));
        }
        const bool pass = strictly_decreasing(values) && values.back() < 1e-2;
        table.failures += pass ? 0 : 1;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          table.add({std::string("theta_limit"), z.real(), z.imag(), static_cast<long long>(m), lambda,
                     alphas[i], values[i], pass});
        }
      }
    }
  }
  table.summary["failed_sequences"] = table.failures;
  return table;
}

// ---------------------------------------------------------------------------

void write_error(std::ostream& err, ErrorKind kind, const std::string& message,
                 std::optional<double> t = std::nullopt) {
  ordered_json rec;
  rec["schema_version"] = 1;
  rec["error"] = {{"kind", std::string(to_string(kind))},
                  {"exit_code", exit_code_for(kind)},
                  {"message", message}};
  if (t) rec["error"]["t"] = *t;
  err << rec.dump() << '\n';
}

// Writes through a temporary buffer so a failed run leaves no partial file.
void emit(const RunManifest& manifest, std::ostream& out,
          const std::function<void(std::ostream&)>& writer) {
  std::ostringstream buffer;
  writer(buffer);
  if (manifest.output_path.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(manifest.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + manifest.output_path + "'");
  file << buffer.str();
}

int dispatch(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  validate_manifest(manifest);
  if (manifest.subcommand == Subcommand::scan) {
    const ShiftConfig cfg = load_config(manifest);
    const ScanReport report =
        scan_fz(cfg, manifest.t_min.value_or(0.0), manifest.t_max.value_or(40.0),
                manifest.step.value_or(0.02), manifest.tol.value_or(1e-8), manifest.workers,
                manifest.settings);
    emit(manifest, out, [&](std::ostream& o) {
      if (manifest.output_format == OutputFormat::csv) {
        write_scan_csv(o, report);
      } else {
        write_scan_json(o, report, manifest.settings);
      }
    });
    return kExitOk;
  }

  Table table;
  switch (manifest.subcommand) {
    case Subcommand::eval: table = run_eval(manifest); break;
    case Subcommand::theta_check: table = run_theta_check(manifest); break;
    case Subcommand::integral_check: table = run_integral_check(manifest); break;
    case Subcommand::region: table = run_region(manifest); break;
    case Subcommand::moments: table = run_moments(manifest); break;
    case Subcommand::limits: table = run_limits(manifest); break;
    case Subcommand::scan: break;
  }
  emit(manifest, out, [&](std::ostream& o) { write_table(o, table, manifest); });
  if (table.failures > 0) {
    write_error(err, ErrorKind::tolerance,
                std::to_string(table.failures) + " check(s) outside tolerance in " +
                    std::string(to_string(manifest.subcommand)));
    return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace

std::string_view to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::eval: return "eval";
    case Subcommand::scan: return "scan";
    case Subcommand::theta_check: return "theta-check";
    case Subcommand::integral_check: return "integral-check";
    case Subcommand::region: return "region";
    case Subcommand::moments: return "moments";
    case Subcommand::limits: return "limits";
  }
  return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (Subcommand s : {Subcommand::eval, Subcommand::scan, Subcommand::theta_check,
                       Subcommand::integral_check, Subcommand::region, Subcommand::moments,
                       Subcommand::limits}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::tolerance:
    case ErrorKind::symmetry:
    case ErrorKind::consistency:
      return kExitTolerance;
    case ErrorKind::config:
    case ErrorKind::parse:
    case ErrorKind::parameter:
    case ErrorKind::domain:
    case ErrorKind::region:
      return kExitConfig;
    default:
      return kExitNumeric;
  }
}

void validate_manifest(const RunManifest& manifest) {
  if (manifest.workers < 1) throw ConfigError("--workers must be at least 1");
  if (manifest.step && !(*manifest.step > 0.0)) throw ConfigError("--step must be positive");
  if (manifest.tol && !(*manifest.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (manifest.t_min && manifest.t_max && !(*manifest.t_min < *manifest.t_max)) {
    throw ConfigError("--t-min must be below --t-max");
  }
}

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(manifest, out, err);
  } catch (const EvaluationError& e) {
    write_error(err, e.kind(), e.what(), e.t());
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    write_error(err, e.kind(), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    write_error(err, ErrorKind::evaluation, e.what());
    return kExitNumeric;
  }
}

}  // namespace vshift
