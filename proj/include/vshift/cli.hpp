#pragma once

// Subcommand dispatch for the vshift command-line tool.
//
// Exit codes: 0 every check within tolerance, 2 a tolerance or consistency
// failure, 3 a configuration or argument error, 4 a numerical failure. On a
// nonzero exit a one-line JSON error record is written to the error stream.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "vshift/errors.hpp"
#include "vshift/types.hpp"

namespace vshift {

enum class Subcommand { eval, scan, theta_check, integral_check, region, moments, limits };
enum class OutputFormat { csv, json };

std::string_view to_string(Subcommand sub);
std::optional<Subcommand> parse_subcommand(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitNumeric = 4;

int exit_code_for(ErrorKind kind);

struct RunManifest {
  Subcommand subcommand = Subcommand::theta_check;
  /// Required by eval, scan and moments.
  std::string config_path;
  EvalSettings settings;
  /// Empty writes to the output stream passed to run().
  std::string output_path;
  OutputFormat output_format = OutputFormat::csv;
  int workers = 1;

  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<double> step;
  /// Bisection tolerance for scan.
  std::optional<double> tol;
  std::optional<int> m;
  std::optional<double> alpha;
  /// Half width of the region grid.
  double extent = 3.0;
  /// moments: skip the alpha -> pi/4 extrapolation row.
  bool skip_limit = false;
};

/// Throws ConfigError when the manifest itself is invalid.
void validate_manifest(const RunManifest& manifest);

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

}  // namespace vshift
