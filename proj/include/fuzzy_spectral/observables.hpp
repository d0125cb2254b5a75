#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy_spectral/spectrum.hpp"

namespace fuzzy {

/// Strictly increasing, positive energy scales Lambda.
class EnergyGrid {
 public:
  explicit EnergyGrid(std::vector<double> values);

  static EnergyGrid logarithmic(double min, double max, std::size_t count);
  static EnergyGrid linear(double min, double max, std::size_t count);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

struct CurvePoint {
  double lambda = 0.0;
  double t = 0.0;
  double trace = 0.0;
  double area = 0.0;
  double dimension = 0.0;

  bool operator==(const CurvePoint&) const = default;
};

struct GeometryCurve {
  std::string label;
  std::vector<CurvePoint> points;
};

enum class Observable { area, dimension };

std::string_view to_string(Observable which);
Observable parse_observable(std::string_view name);

struct PeakResult {
  double lambda_star = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Thrown by find_peak when the maximum over the coarse scan sits on an end
/// of the requested bracket.
class PeakAtBoundaryError : public std::runtime_error {
 public:
  PeakAtBoundaryError(const std::string& what, double lambda_at_max)
      : std::runtime_error(what), lambda_at_max_(lambda_at_max) {}
  double lambda_at_max() const { return lambda_at_max_; }

 private:
  double lambda_at_max_;
};

/// A(Lambda) = 2 pi (P(1/Lambda^2) + 1/3) / Lambda^2.
double area(const DiracSpectrum& spectrum, double lambda);

/// D_s = -2 dlnP/dlnT = 2 T sum(deg x e^{-xT}) / sum(deg e^{-xT}), T = 1/Lambda^2.
/// Non-negative; zero when every eigenvalue vanishes.
double spectral_dimension(const DiracSpectrum& spectrum, double lambda);

/// Central difference of ln P in ln Lambda with samples at Lambda (1 +- rel_step).
/// Cross-check for spectral_dimension; agrees to O(rel_step^2).
double spectral_dimension_fd(const DiracSpectrum& spectrum, double lambda, double rel_step);

double evaluate(const DiracSpectrum& spectrum, Observable which, double lambda);

/// Evaluates every grid point. threads <= 1 runs inline; any thread count
/// yields bit-identical points.
GeometryCurve sweep(const DiracSpectrum& spectrum, const EnergyGrid& grid,
                    unsigned threads = 1);

inline constexpr std::size_t kPeakScanPoints = 512;
inline constexpr double kPeakRelTolerance = 1e-6;

/// Maximum of `which` inside [lo, hi]: a 512-point log scan picks the best
/// grid cell, golden-section search refines it to 1e-6 relative in Lambda.
/// The returned bracket is the pair of scan points around the maximum.
PeakResult find_peak(const DiracSpectrum& spectrum, Observable which, double lo, double hi);

}  // namespace fuzzy
