#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzy_spectral/curve_io.hpp"
#include "fuzzy_spectral/observables.hpp"
#include "fuzzy_spectral/spectrum.hpp"

namespace fuzzy::app {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

inline constexpr double kAlgebraTolerance = 1e-10;

/// Bad user input; maps to exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { spectrum, trace, area, dimension, sweep, peak, verify_algebra, figures };

Command parse_command(std::string_view name);
std::string_view to_string(Command command);

struct GridSpec {
  double min = 0.1;
  double max = 100.0;
  std::size_t count = 200;
  bool linear = false;

  EnergyGrid build() const;
  nlohmann::json to_json() const;
};

struct RunConfig {
  Command command = Command::sweep;
  std::vector<int> n_list;
  int n_max = 40;
  bool standard = false;
  GridSpec grid;
  bool grid_given = false;
  std::vector<double> lambdas;
  bool include_zero_modes = false;
  double radius = 1.0;
  bool normalize_area = false;
  std::filesystem::path output_path;
  io::Format format = io::Format::csv;
  Observable which = Observable::area;
  unsigned threads = 1;
  // Test hook for verify-algebra: x3 is multiplied by this factor.
  double fault_scale = 1.0;

  void validate() const;
};

/// A spectrum requested by a config together with its metadata record.
struct SpectrumJob {
  DiracSpectrum spectrum;
  nlohmann::json metadata;
  std::string file_stem;
};

/// One job per --N value, plus the truncated round sphere when `standard`
/// is set (or always, for `figures`).
std::vector<SpectrumJob> spectrum_jobs(const RunConfig& config);

std::vector<std::filesystem::path> run_figures(const RunConfig& config);

struct AlgebraCheck {
  int n = 0;
  double commutator = 0.0;
  double casimir = 0.0;
  double hermiticity = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<AlgebraCheck> checks;
  bool passed() const;
};

VerifyReport run_verify_algebra(const RunConfig& config);
void print_verify_report(std::ostream& out, const VerifyReport& report);

/// Runs a command and returns the process exit status. Results go to `out`
/// unless an output directory is configured.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Thread count from FUZZY_SPECTRAL_THREADS, or 1 when unset or invalid.
unsigned threads_from_environment();

}  // namespace fuzzy::app
