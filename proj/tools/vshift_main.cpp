#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vshift/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Vertical-shift zeta combinations: theta identities, moment checks, zero scans"};
  app.set_version_flag("--version", "vshift 1.0.0");

  std::string sub;
  std::string format = "csv";
  vshift::RunManifest manifest;
  double rel_tol = manifest.settings.rel_tol();
  double quad_abs_tol = manifest.settings.quad_abs_tol();
  int max_terms = manifest.settings.max_terms();

  app.add_option("subcommand", sub,
                 "eval | scan | theta-check | integral-check | region | moments | limits")
      ->required();
  app.add_option("--config", manifest.config_path, "shift configuration file (YAML)");
  app.add_option("--out", manifest.output_path, "output file (default: standard output)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", manifest.workers, "worker threads for scan and region");
  app.add_option("--t-min", manifest.t_min, "lower end of the t range");
  app.add_option("--t-max", manifest.t_max, "upper end of the t range");
  app.add_option("--step", manifest.step, "grid step");
  app.add_option("--tol", manifest.tol, "bisection tolerance for scan");
  app.add_option("--m", manifest.m, "moment order (moments)");
  app.add_option("--alpha", manifest.alpha, "moment weight exponent (moments)");
  app.add_option("--extent", manifest.extent, "half width of the region grid");
  app.add_flag("--skip-limit", manifest.skip_limit, "moments: skip the alpha -> pi/4 limit row");
  app.add_option("--rel-tol", rel_tol, "relative tolerance of series and quadrature");
  app.add_option("--quad-abs-tol", quad_abs_tol, "absolute quadrature tolerance");
  app.add_option("--max-terms", max_terms, "series term budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vshift::kExitConfig;
  }

  const auto parsed = vshift::parse_subcommand(sub);
  if (!parsed) {
    std::cerr << R"({"schema_version":1,"error":{"kind":"ConfigError","exit_code":3,"message":"unknown subcommand ')"
              << sub << R"('"}})" << '\n';
    return vshift::kExitConfig;
  }
  manifest.subcommand = *parsed;
  manifest.output_format = format == "json" ? vshift::OutputFormat::json : vshift::OutputFormat::csv;
  try {
    manifest.settings =
        vshift::EvalSettings(rel_tol, max_terms, manifest.settings.em_terms(), quad_abs_tol);
  } catch (const vshift::Error& e) {
    std::cerr << e.what() << '\n';
    return vshift::kExitConfig;
  }
  return vshift::run(manifest, std::cout, std::cerr);
}
