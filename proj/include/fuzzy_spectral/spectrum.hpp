#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzy {

/// Truncation parameter N, radius l and whether the l = N + 1 zero modes are
/// part of the spectrum.
struct FuzzySphereParams {
  int n = 1;
  double radius = 1.0;
  bool include_zero_modes = false;

  void validate() const;
};

/// One squared Dirac eigenvalue and its multiplicity. `l` is the integer
/// mode label j + 1/2 (n for the round sphere).
struct SpectralLine {
  double eigenvalue_sq = 0.0;
  std::int64_t degeneracy = 1;
  int l = 0;

  double j() const { return l - 0.5; }
};

/// Immutable, finite Dirac spectrum sorted by eigenvalue_sq (ties by l).
///
/// Besides the line list it keeps a packed structure-of-arrays copy in
/// descending eigenvalue order, which is the layout the heat-trace kernels
/// consume: smallest exponentials first.
class DiracSpectrum {
 public:
  DiracSpectrum(std::vector<SpectralLine> lines, std::string label);

  const std::vector<SpectralLine>& lines() const { return lines_; }
  const std::string& label() const { return label_; }
  std::int64_t total_dim() const { return total_dim_; }
  bool empty() const { return lines_.empty(); }
  std::size_t size() const { return lines_.size(); }

  /// eigenvalue_sq in descending order.
  const std::vector<double>& packed_eigenvalues_desc() const { return packed_eig_; }
  /// Degeneracies as doubles, aligned with packed_eigenvalues_desc().
  const std::vector<double>& packed_weights_desc() const { return packed_weight_; }

  /// Smallest eigenvalue_sq that is strictly positive, or 0 if none.
  double min_positive_eigenvalue_sq() const;

 private:
  std::vector<SpectralLine> lines_;
  std::string label_;
  std::int64_t total_dim_ = 0;
  std::vector<double> packed_eig_;
  std::vector<double> packed_weight_;
};

/// Squared eigenvalue of the mode with label l = j + 1/2 at radius 1:
/// l^2 (1 + (1 - l^2) / (N (N + 2))), evaluated as l^2 ((N+1)^2 - l^2) / (N (N + 2)).
double fuzzy_eigenvalue_sq(int n, int l);

DiracSpectrum fuzzy_dirac_spectrum(const FuzzySphereParams& params);

/// Round unit sphere truncated at n_max: lines (n^2, 4 n) for n = 1..n_max.
DiracSpectrum standard_dirac_spectrum(int n_max);

double max_eigenvalue_sq(const DiracSpectrum& spectrum);

/// Upper bound (N+1)^4 / (4 N (N + 2)) of the fuzzy eigenvalues at radius 1.
double fuzzy_eigenvalue_ceiling(int n);

}  // namespace fuzzy
