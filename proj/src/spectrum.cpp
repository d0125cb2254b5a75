#include "fuzzy_spectral/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fuzzy {

void FuzzySphereParams::validate() const {
  if (n < 1) throw std::invalid_argument("truncation parameter N must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("radius must be a positive finite number");
}

DiracSpectrum::DiracSpectrum(std::vector<SpectralLine> lines, std::string label)
    : lines_(std::move(lines)), label_(std::move(label)) {
  for (const auto& line : lines_) {
    if (!(line.eigenvalue_sq >= 0.0) || !std::isfinite(line.eigenvalue_sq))
      throw std::invalid_argument("spectral line with negative or non-finite eigenvalue_sq");
    if (line.degeneracy < 1) throw std::invalid_argument("spectral line with degeneracy < 1");
    total_dim_ += line.degeneracy;
  }
  std::stable_sort(lines_.begin(), lines_.end(), [](const SpectralLine& a, const SpectralLine& b) {
    if (a.eigenvalue_sq != b.eigenvalue_sq) return a.eigenvalue_sq < b.eigenvalue_sq;
    return a.l < b.l;
  });
  packed_eig_.reserve(lines_.size());
  packed_weight_.reserve(lines_.size());
  for (auto it = lines_.rbegin(); it != lines_.rend(); ++it) {
    packed_eig_.push_back(it->eigenvalue_sq);
    packed_weight_.push_back(static_cast<double>(it->degeneracy));
  }
}

double DiracSpectrum::min_positive_eigenvalue_sq() const {
  for (const auto& line : lines_)
    if (line.eigenvalue_sq > 0.0) return line.eigenvalue_sq;
  return 0.0;
}

double fuzzy_eigenvalue_sq(int n, int l) {
  if (n < 1) throw std::invalid_argument("truncation parameter N must be >= 1");
  if (l < 1 || l > n + 1) throw std::invalid_argument("mode label l must lie in [1, N + 1]");
  // Integer numerator and denominator are exact in double for any N we can
  // afford to enumerate, so the only rounding is the final division.
  const double nn = n;
  const double ll = static_cast<double>(l) * l;
  const double ceiling = (nn + 1.0) * (nn + 1.0);
  return ll * (ceiling - ll) / (nn * (nn + 2.0));
}

DiracSpectrum fuzzy_dirac_spectrum(const FuzzySphereParams& params) {
  params.validate();
  const int top = params.include_zero_modes ? params.n + 1 : params.n;
  const double inv_r2 = 1.0 / (params.radius * params.radius);
  std::vector<SpectralLine> lines;
  lines.reserve(static_cast<std::size_t>(top));
  for (int l = 1; l <= top; ++l) {
    double eig = fuzzy_eigenvalue_sq(params.n, l);
    if (params.radius != 1.0) eig *= inv_r2;
    lines.push_back({eig, 4 * static_cast<std::int64_t>(l), l});
  }
  std::string label = "fuzzy N=" + std::to_string(params.n);
  if (params.include_zero_modes) label += " +zero-modes";
  return DiracSpectrum(std::move(lines), std::move(label));
}

DiracSpectrum standard_dirac_spectrum(int n_max) {
  if (n_max < 1) throw std::invalid_argument("standard spectrum truncation n_max must be >= 1");
  std::vector<SpectralLine> lines;
  lines.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    lines.push_back({static_cast<double>(n) * n, 4 * static_cast<std::int64_t>(n), n});
  return DiracSpectrum(std::move(lines), "standard nmax=" + std::to_string(n_max));
}

double max_eigenvalue_sq(const DiracSpectrum& spectrum) {
  if (spectrum.empty()) throw std::invalid_argument("max_eigenvalue_sq of an empty spectrum");
  double best = 0.0;
  for (const auto& line : spectrum.lines()) best = std::max(best, line.eigenvalue_sq);
  return best;
}

double fuzzy_eigenvalue_ceiling(int n) {
  if (n < 1) throw std::invalid_argument("truncation parameter N must be >= 1");
  const double nn = n;
  const double p = (nn + 1.0) * (nn + 1.0);
  return p * p / (4.0 * nn * (nn + 2.0));
}

}  // namespace fuzzy
