#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fuzzy_spectral/observables.hpp"
#include "fuzzy_spectral/spectrum.hpp"

namespace fuzzy::io {

enum class Format { csv, json };

Format parse_format(std::string_view name);
std::string_view extension(Format format);

/// Reals are written with 17 significant digits so they parse back exactly.
std::string format_real(double value);

// Curve CSV: one "# {json}" metadata line, a column header, then rows of
// lambda,t,trace,area,dimension[,area_normalized].
void write_curve_csv(std::ostream& out, const GeometryCurve& curve,
                     const nlohmann::json& metadata, bool normalize_area);
void write_curve_json(std::ostream& out, const GeometryCurve& curve,
                      const nlohmann::json& metadata, bool normalize_area);
void write_curve(std::ostream& out, Format format, const GeometryCurve& curve,
                 const nlohmann::json& metadata, bool normalize_area);

struct ParsedCurve {
  GeometryCurve curve;
  nlohmann::json metadata;
};

/// Reads what write_curve_csv produced. Comment lines other than the first
/// metadata line are skipped.
ParsedCurve read_curve_csv(std::istream& in);
ParsedCurve read_curve_json(std::istream& in);

/// Columns l,j,eigenvalue_sq,degeneracy.
void write_spectrum_csv(std::ostream& out, const DiracSpectrum& spectrum,
                        const nlohmann::json& metadata);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

/// Lower-case hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace fuzzy::io
