#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzy_spectral/app.hpp"
#include "fuzzy_spectral/kernels.hpp"
#include "fuzzy_spectral/version.hpp"

namespace {

using fuzzy::app::Command;
using fuzzy::app::RunConfig;

// Flags shared by every subcommand.
void add_common_options(CLI::App* sub, RunConfig& config, std::string& format,
                        std::string& kernel) {
  sub->add_option("--N", config.n_list, "Fuzzy-sphere truncation parameters")->delimiter(',');
  sub->add_option("--nmax", config.n_max, "Round-sphere truncation (number of eigenvalues)")
      ->capture_default_str();
  sub->add_flag("--standard", config.standard, "Also evaluate the truncated round sphere");
  sub->add_option("--radius", config.radius, "Sphere radius")->capture_default_str();
  sub->add_flag("--include-zero-modes", config.include_zero_modes,
                "Keep the l = N+1 modes whose eigenvalue vanishes");
  sub->add_option("--out", config.output_path, "Output directory (default: stdout)");
  sub->add_option("--format", format, "csv or json")->capture_default_str();
  sub->add_option("--kernel", kernel, "scalar, avx2 or auto")->capture_default_str();
}

void add_grid_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("--lambda-min", config.grid.min, "Smallest energy scale")->capture_default_str();
  sub->add_option("--lambda-max", config.grid.max, "Largest energy scale")->capture_default_str();
  sub->add_option("--points", config.grid.count, "Number of grid points")->capture_default_str();
  sub->add_flag("--linear", config.grid.linear, "Linear instead of log spacing");
}

bool grid_flags_given(const CLI::App* sub) {
  for (const char* name : {"--lambda-min", "--lambda-max", "--points", "--linear"}) {
    const auto* opt = sub->get_option_no_throw(name);
    if (opt != nullptr && opt->count() > 0) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Dirac spectrum, heat trace, area and spectral dimension of the fuzzy sphere"};
  cli.set_version_flag("--version", fuzzy::kVersion);
  cli.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";
  std::string kernel = "auto";
  std::string which = "area";

  struct Entry {
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {Command::spectrum, "Print squared Dirac eigenvalues and degeneracies"},
      {Command::trace, "Heat trace and its t-derivative over energy scales"},
      {Command::area, "Area function A(lambda)"},
      {Command::dimension, "Spectral dimension D_s(lambda)"},
      {Command::sweep, "Full curve (trace, area, dimension) over a grid"},
      {Command::peak, "Locate the maximum of the area or dimension curve"},
      {Command::verify_algebra, "Check the coordinate commutation relation and radius constraint"},
      {Command::figures, "Write curve files for each N plus the round sphere, with a manifest"},
  };
  for (const auto& entry : entries) {
    auto* sub = cli.add_subcommand(std::string(fuzzy::app::to_string(entry.command)), entry.help);
    add_common_options(sub, config, format, kernel);
    if (entry.command == Command::verify_algebra) {
      // Test hook: perturbs x3 so the failure path can be exercised.
      sub->add_option("--inject-fault", config.fault_scale)->group("");
      continue;
    }
    if (entry.command == Command::spectrum) continue;
    add_grid_options(sub, config);
    sub->add_flag("--normalize-area", config.normalize_area, "Add area / 4 pi column");
    if (entry.command != Command::sweep && entry.command != Command::figures &&
        entry.command != Command::peak)
      sub->add_option("--lambda", config.lambdas, "Explicit energy scales")->delimiter(',');
    if (entry.command == Command::peak)
      sub->add_option("--which", which, "area or dimension")->capture_default_str();
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : fuzzy::app::kExitValidation;
  }

  for (const auto& entry : entries) {
    const auto* sub = cli.get_subcommand(std::string(fuzzy::app::to_string(entry.command)));
    if (sub->parsed()) {
      config.command = entry.command;
      config.grid_given = grid_flags_given(sub);
    }
  }

  try {
    config.format = fuzzy::io::parse_format(format);
    config.which = fuzzy::parse_observable(which);
    fuzzy::kernels::set_active(fuzzy::kernels::parse_kind(kernel));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fuzzy::app::kExitValidation;
  }
  config.threads = fuzzy::app::threads_from_environment();
  return fuzzy::app::run(config, std::cout, std::cerr);
}
