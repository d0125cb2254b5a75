#include "fuzzy_spectral/curve_io.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fuzzy::io {

namespace {

constexpr std::string_view kCurveColumns = "lambda,t,trace,area,dimension";

double normalized(double area) { return area / (4.0 * std::numbers::pi); }

double parse_real(std::string_view field) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw std::runtime_error("malformed number '" + std::string(field) + "' in curve file");
  return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (csv|json)");
}

std::string_view extension(Format format) { return format == Format::csv ? ".csv" : ".json"; }

std::string format_real(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("failed to format real");
  return std::string(buffer.data(), end);
}

void write_curve_csv(std::ostream& out, const GeometryCurve& curve,
                     const nlohmann::json& metadata, bool normalize_area) {
  auto header = metadata;
  header["label"] = curve.label;
  out << "# " << header.dump() << '\n';
  out << kCurveColumns << (normalize_area ? ",area_normalized" : "") << '\n';
  for (const auto& p : curve.points) {
    out << format_real(p.lambda) << ',' << format_real(p.t) << ',' << format_real(p.trace) << ','
        << format_real(p.area) << ',' << format_real(p.dimension);
    if (normalize_area) out << ',' << format_real(normalized(p.area));
    out << '\n';
  }
}

void write_curve_json(std::ostream& out, const GeometryCurve& curve,
                      const nlohmann::json& metadata, bool normalize_area) {
  nlohmann::json doc;
  doc["metadata"] = metadata;
  doc["metadata"]["label"] = curve.label;
  auto& points = doc["points"] = nlohmann::json::array();
  for (const auto& p : curve.points) {
    nlohmann::json row = {{"lambda", p.lambda},
                          {"t", p.t},
                          {"trace", p.trace},
                          {"area", p.area},
                          {"dimension", p.dimension}};
    if (normalize_area) row["area_normalized"] = normalized(p.area);
    points.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

void write_curve(std::ostream& out, Format format, const GeometryCurve& curve,
                 const nlohmann::json& metadata, bool normalize_area) {
  if (format == Format::csv)
    write_curve_csv(out, curve, metadata, normalize_area);
  else
    write_curve_json(out, curve, metadata, normalize_area);
}

ParsedCurve read_curve_csv(std::istream& in) {
  ParsedCurve parsed;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (parsed.metadata.is_null()) {
        parsed.metadata = nlohmann::json::parse(line.substr(1));
        if (parsed.metadata.contains("label"))
          parsed.curve.label = parsed.metadata["label"].get<std::string>();
      }
      continue;
    }
    if (!have_columns) {
      if (line.rfind(kCurveColumns, 0) != 0)
        throw std::runtime_error("curve file lacks the '" + std::string(kCurveColumns) + "' header");
      have_columns = true;
      continue;
    }
    const auto fields = split_commas(line);
    if (fields.size() < 5) throw std::runtime_error("curve row has fewer than 5 columns");
    parsed.curve.points.push_back({parse_real(fields[0]), parse_real(fields[1]),
                                   parse_real(fields[2]), parse_real(fields[3]),
                                   parse_real(fields[4])});
  }
  if (!have_columns) throw std::runtime_error("curve file has no column header");
  return parsed;
}

ParsedCurve read_curve_json(std::istream& in) {
  const auto doc = nlohmann::json::parse(in);
  ParsedCurve parsed;
  parsed.metadata = doc.at("metadata");
  parsed.curve.label = parsed.metadata.value("label", "");
  for (const auto& row : doc.at("points")) {
    parsed.curve.points.push_back({row.at("lambda").get<double>(), row.at("t").get<double>(),
                                   row.at("trace").get<double>(), row.at("area").get<double>(),
                                   row.at("dimension").get<double>()});
  }
  return parsed;
}

void write_spectrum_csv(std::ostream& out, const DiracSpectrum& spectrum,
                        const nlohmann::json& metadata) {
  auto header = metadata;
  header["label"] = spectrum.label();
  header["total_dim"] = spectrum.total_dim();
  out << "# " << header.dump() << '\n';
  out << "l,j,eigenvalue_sq,degeneracy\n";
  for (const auto& line : spectrum.lines()) {
    out << line.l << ',' << format_real(line.j()) << ',' << format_real(line.eigenvalue_sq) << ','
        << line.degeneracy << '\n';
  }
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  auto temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw std::runtime_error("failed writing '" + temp.string() + "'");
    }
  }
  std::filesystem::rename(temp, path);
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1)
    throw std::runtime_error("sha256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace fuzzy::io
