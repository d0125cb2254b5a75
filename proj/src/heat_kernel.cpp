#include "fuzzy_spectral/heat_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fuzzy_spectral/kernels.hpp"

namespace fuzzy {

namespace {

void check_time(double t) {
  if (std::isnan(t) || t < 0.0) throw std::invalid_argument("diffusion time t must be >= 0");
}

kernels::HeatMoments moments(const DiracSpectrum& spectrum, double t) {
  return kernels::heat_moments(kernels::active(), spectrum.packed_eigenvalues_desc(),
                               spectrum.packed_weights_desc(), t);
}

}  // namespace

double heat_trace(const DiracSpectrum& spectrum, double t) {
  check_time(t);
  if (t == 0.0) return static_cast<double>(spectrum.total_dim());
  return moments(spectrum, t).trace;
}

double heat_trace_derivative(const DiracSpectrum& spectrum, double t) {
  check_time(t);
  return -moments(spectrum, t).weighted;
}

HeatTracePoint heat_trace_point(const DiracSpectrum& spectrum, double t) {
  check_time(t);
  const auto m = moments(spectrum, t);
  const double trace = t == 0.0 ? static_cast<double>(spectrum.total_dim()) : m.trace;
  return {t, trace, -m.weighted};
}

double standard_asymptotic_trace(double t, double area) {
  if (!(t > 0.0)) throw std::invalid_argument("standard_asymptotic_trace requires t > 0");
  return area / (2.0 * std::numbers::pi * t) - 1.0 / 3.0;
}

}  // namespace fuzzy
