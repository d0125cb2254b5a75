#include "fuzzy_spectral/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fuzzy_spectral/algebra.hpp"
#include "fuzzy_spectral/heat_kernel.hpp"
#include "fuzzy_spectral/kernels.hpp"
#include "fuzzy_spectral/version.hpp"

namespace fuzzy::app {

namespace {

// Rows of reals under named columns, for the pointwise commands.
struct Table {
  nlohmann::json metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(std::ostream& out, io::Format format, const Table& table) {
  if (format == io::Format::json) {
    nlohmann::json doc;
    doc["metadata"] = table.metadata;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json record = nlohmann::json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) record[table.columns[c]] = row[c];
      rows.push_back(std::move(record));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# " << table.metadata.dump() << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << io::format_real(row[c]);
    out << '\n';
  }
}

std::vector<double> requested_lambdas(const RunConfig& config) {
  if (!config.lambdas.empty()) return config.lambdas;
  return config.grid.build().values();
}

nlohmann::json base_metadata(const RunConfig& config) {
  nlohmann::json meta;
  meta["tool"] = kToolName;
  meta["version"] = kVersion;
  meta["command"] = to_string(config.command);
  meta["kernel"] = kernels::to_string(kernels::active());
  if (config.lambdas.empty())
    meta["grid"] = config.grid.to_json();
  else
    meta["lambdas"] = config.lambdas;
  meta["normalize_area"] = config.normalize_area;
  return meta;
}

// Writes either to `out` or, when an output directory is configured, to
// <dir>/<stem><suffix><ext>. Returns the path written, if any.
std::optional<std::filesystem::path> emit(const RunConfig& config, std::ostream& out,
                                          const std::string& stem, const std::string& suffix,
                                          const std::string& contents) {
  if (config.output_path.empty()) {
    out << contents;
    return std::nullopt;
  }
  std::filesystem::create_directories(config.output_path);
  const auto path =
      config.output_path / (stem + suffix + std::string(io::extension(config.format)));
  io::write_file_atomically(path, contents);
  return path;
}

void run_spectrum(const RunConfig& config, std::ostream& out) {
  for (const auto& job : spectrum_jobs(config)) {
    std::ostringstream text;
    if (config.format == io::Format::csv) {
      io::write_spectrum_csv(text, job.spectrum, job.metadata);
    } else {
      nlohmann::json doc;
      doc["metadata"] = job.metadata;
      doc["metadata"]["label"] = job.spectrum.label();
      doc["metadata"]["total_dim"] = job.spectrum.total_dim();
      auto& lines = doc["lines"] = nlohmann::json::array();
      for (const auto& line : job.spectrum.lines())
        lines.push_back({{"l", line.l},
                         {"j", line.j()},
                         {"eigenvalue_sq", line.eigenvalue_sq},
                         {"degeneracy", line.degeneracy}});
      text << doc.dump(2) << '\n';
    }
    emit(config, out, job.file_stem, "_spectrum", text.str());
  }
}

void run_pointwise(const RunConfig& config, std::ostream& out) {
  const auto lambdas = requested_lambdas(config);
  for (const auto& job : spectrum_jobs(config)) {
    Table table;
    table.metadata = job.metadata;
    table.metadata["label"] = job.spectrum.label();
    std::string suffix;
    switch (config.command) {
      case Command::trace:
        suffix = "_trace";
        table.columns = {"t", "lambda", "trace", "trace_t_derivative"};
        for (double lambda : lambdas) {
          const auto p = heat_trace_point(job.spectrum, 1.0 / (lambda * lambda));
          table.rows.push_back({p.t, lambda, p.trace, p.trace_t_derivative});
        }
        break;
      case Command::area:
        suffix = "_area";
        table.columns = {"lambda", "t", "trace", "area"};
        if (config.normalize_area) table.columns.emplace_back("area_normalized");
        for (double lambda : lambdas) {
          const double t = 1.0 / (lambda * lambda);
          const double a = area(job.spectrum, lambda);
          table.rows.push_back({lambda, t, heat_trace(job.spectrum, t), a});
          if (config.normalize_area) table.rows.back().push_back(a / (4.0 * std::numbers::pi));
        }
        break;
      case Command::dimension:
        suffix = "_dimension";
        table.columns = {"lambda", "t", "trace", "dimension"};
        for (double lambda : lambdas) {
          const double t = 1.0 / (lambda * lambda);
          table.rows.push_back(
              {lambda, t, heat_trace(job.spectrum, t), spectral_dimension(job.spectrum, lambda)});
        }
        break;
      default:
        throw std::logic_error("run_pointwise called for a non-pointwise command");
    }
    std::ostringstream text;
    write_table(text, config.format, table);
    emit(config, out, job.file_stem, suffix, text.str());
  }
}

void run_sweep(const RunConfig& config, std::ostream& out) {
  const EnergyGrid grid(requested_lambdas(config));
  for (const auto& job : spectrum_jobs(config)) {
    const auto curve = sweep(job.spectrum, grid, config.threads);
    std::ostringstream text;
    io::write_curve(text, config.format, curve, job.metadata, config.normalize_area);
    emit(config, out, job.file_stem, "", text.str());
  }
}

void run_peak(const RunConfig& config, std::ostream& out) {
  // Without explicit grid flags the default [0.1, 100] would always see the
  // low-Lambda divergence at its left edge.
  const double lo = config.grid_given ? config.grid.min : 1.0;
  const double hi = config.grid_given ? config.grid.max : 1000.0;
  for (const auto& job : spectrum_jobs(config)) {
    const auto peak = find_peak(job.spectrum, config.which, lo, hi);
    Table table;
    table.metadata = job.metadata;
    table.metadata["label"] = job.spectrum.label();
    table.metadata["observable"] = to_string(config.which);
    table.metadata.erase("grid");
    table.metadata["search_bracket"] = {lo, hi};
    table.columns = {"lambda_star", "value", "bracket_lo", "bracket_hi"};
    table.rows.push_back({peak.lambda_star, peak.value, peak.bracket_lo, peak.bracket_hi});
    std::ostringstream text;
    write_table(text, config.format, table);
    emit(config, out, job.file_stem, "_peak_" + std::string(to_string(config.which)), text.str());
  }
}

}  // namespace

Command parse_command(std::string_view name) {
  static constexpr std::pair<std::string_view, Command> kNames[] = {
      {"spectrum", Command::spectrum},   {"trace", Command::trace},
      {"area", Command::area},           {"dimension", Command::dimension},
      {"sweep", Command::sweep},         {"peak", Command::peak},
      {"verify-algebra", Command::verify_algebra}, {"figures", Command::figures},
  };
  for (const auto& [text, command] : kNames)
    if (text == name) return command;
  throw ValidationError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::spectrum: return "spectrum";
    case Command::trace: return "trace";
    case Command::area: return "area";
    case Command::dimension: return "dimension";
    case Command::sweep: return "sweep";
    case Command::peak: return "peak";
    case Command::verify_algebra: return "verify-algebra";
    case Command::figures: return "figures";
  }
  return "unknown";
}

EnergyGrid GridSpec::build() const {
  return linear ? EnergyGrid::linear(min, max, count) : EnergyGrid::logarithmic(min, max, count);
}

nlohmann::json GridSpec::to_json() const {
  return {{"min", min}, {"max", max}, {"count", count}, {"spacing", linear ? "linear" : "log"}};
}

void RunConfig::validate() const {
  for (int n : n_list)
    if (n < 1) throw ValidationError("truncation parameter N must be >= 1 (got " + std::to_string(n) + ")");
  if (n_max < 1) throw ValidationError("--nmax must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ValidationError("--radius must be > 0");
  if (!(grid.min > 0.0) || !(grid.min < grid.max) || !std::isfinite(grid.max))
    throw ValidationError("energy grid needs 0 < lambda-min < lambda-max");
  if (grid.count < 2) throw ValidationError("energy grid needs at least 2 points");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || !std::isfinite(lambdas[i]))
      throw ValidationError("--lambda values must be positive");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
      throw ValidationError("--lambda values must be strictly increasing");
  }
  if (threads < 1) throw ValidationError("thread count must be >= 1");
  const bool needs_n = command == Command::figures || command == Command::verify_algebra;
  if (n_list.empty() && (needs_n || !standard)) throw ValidationError("no spectra requested");
}

std::vector<SpectrumJob> spectrum_jobs(const RunConfig& config) {
  std::vector<SpectrumJob> jobs;
  const auto common = base_metadata(config);
  for (int n : config.n_list) {
    FuzzySphereParams params{n, config.radius, config.include_zero_modes};
    auto meta = common;
    meta["spectrum"] = "fuzzy";
    meta["N"] = n;
    meta["n_max"] = nullptr;
    meta["include_zero_modes"] = config.include_zero_modes;
    meta["radius"] = config.radius;
    std::string stem = "fuzzy_N" + std::to_string(n);
    if (config.include_zero_modes) stem += "_zero_modes";
    jobs.push_back({fuzzy_dirac_spectrum(params), std::move(meta), std::move(stem)});
  }
  if (config.standard || config.command == Command::figures) {
    auto meta = common;
    meta["spectrum"] = "standard";
    meta["N"] = nullptr;
    meta["n_max"] = config.n_max;
    meta["include_zero_modes"] = false;
    meta["radius"] = 1.0;
    jobs.push_back({standard_dirac_spectrum(config.n_max), std::move(meta),
                    "standard_nmax" + std::to_string(config.n_max)});
  }
  return jobs;
}

std::vector<std::filesystem::path> run_figures(const RunConfig& config) {
  config.validate();
  if (config.output_path.empty()) throw ValidationError("figures needs an output directory (--out)");
  std::error_code ec;
  std::filesystem::create_directories(config.output_path, ec);
  if (ec || !std::filesystem::is_directory(config.output_path))
    throw ValidationError("cannot create output directory '" + config.output_path.string() + "'");

  const EnergyGrid grid(requested_lambdas(config));
  nlohmann::json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kVersion;
  manifest["inputs"] = {{"N", config.n_list},
                        {"n_max", config.n_max},
                        {"include_zero_modes", config.include_zero_modes},
                        {"radius", config.radius},
                        {"normalize_area", config.normalize_area},
                        {"format", config.format == io::Format::csv ? "csv" : "json"},
                        {"kernel", kernels::to_string(kernels::active())}};
  if (config.lambdas.empty())
    manifest["inputs"]["grid"] = config.grid.to_json();
  else
    manifest["inputs"]["lambdas"] = config.lambdas;
  manifest["outputs"] = nlohmann::json::array();

  std::vector<std::filesystem::path> written;
  for (const auto& job : spectrum_jobs(config)) {
    const auto curve = sweep(job.spectrum, grid, config.threads);
    std::ostringstream text;
    io::write_curve(text, config.format, curve, job.metadata, config.normalize_area);
    const auto contents = text.str();
    const auto name = job.file_stem + std::string(io::extension(config.format));
    const auto path = config.output_path / name;
    io::write_file_atomically(path, contents);
    written.push_back(path);
    manifest["outputs"].push_back({{"file", name},
                                   {"label", curve.label},
                                   {"rows", curve.points.size()},
                                   {"sha256", io::sha256_hex(contents)}});
  }
  const auto manifest_path = config.output_path / "manifest.json";
  io::write_file_atomically(manifest_path, manifest.dump(2) + "\n");
  written.push_back(manifest_path);
  return written;
}

bool VerifyReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const AlgebraCheck& c) { return c.passed; });
}

VerifyReport run_verify_algebra(const RunConfig& config) {
  config.validate();
  VerifyReport report;
  for (int n : config.n_list) {
    auto coords = fuzzy_coordinates({n, config.radius, false});
    if (config.fault_scale != 1.0) coords.x[2] *= config.fault_scale;
    AlgebraCheck check;
    check.n = n;
    check.commutator = commutator_residual(coords);
    check.casimir = casimir_residual(coords);
    check.hermiticity = hermiticity_residual(coords);
    check.passed = check.commutator <= kAlgebraTolerance && check.casimir <= kAlgebraTolerance &&
                   check.hermiticity <= kAlgebraTolerance;
    report.checks.push_back(check);
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  out << "N,commutator_residual,casimir_residual,hermiticity_residual,status\n";
  for (const auto& c : report.checks) {
    out << c.n << ',' << io::format_real(c.commutator) << ',' << io::format_real(c.casimir) << ','
        << io::format_real(c.hermiticity) << ',' << (c.passed ? "ok" : "FAIL") << '\n';
  }
  out << "# tolerance " << io::format_real(kAlgebraTolerance) << ": "
      << (report.passed() ? "all residuals within tolerance" : "verification FAILED") << '\n';
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::spectrum: run_spectrum(config, out); break;
      case Command::trace:
      case Command::area:
      case Command::dimension: run_pointwise(config, out); break;
      case Command::sweep: run_sweep(config, out); break;
      case Command::peak: run_peak(config, out); break;
      case Command::verify_algebra: {
        const auto report = run_verify_algebra(config);
        print_verify_report(out, report);
        return report.passed() ? kExitSuccess : kExitVerification;
      }
      case Command::figures: {
        for (const auto& path : run_figures(config)) out << path.string() << '\n';
        break;
      }
    }
  } catch (const PeakAtBoundaryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitSuccess;
}

unsigned threads_from_environment() {
  const char* value = std::getenv("FUZZY_SPECTRAL_THREADS");
  if (value == nullptr) return 1;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 1) return 1;
  return static_cast<unsigned>(std::min(parsed, 256L));
}

}  // namespace fuzzy::app
