#include <cmath>
#include <stdexcept>

#include "fuzzy_spectral/compensated.hpp"
#include "fuzzy_spectral/kernels.hpp"

namespace fuzzy::kernels {

HeatMoments heat_moments_scalar(std::span<const double> eigenvalues,
                                std::span<const double> weights, double t) {
  if (eigenvalues.size() != weights.size())
    throw std::invalid_argument("heat_moments: eigenvalue and weight spans differ in length");
  KahanSum<double> trace;
  KahanSum<double> weighted;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const double exponent = eigenvalues[k] * t;
    if (exponent > kUnderflowExponent) continue;
    const double term = weights[k] * std::exp(-exponent);
    trace += term;
    weighted += term * eigenvalues[k];
  }
  return {trace.value(), weighted.value()};
}

}  // namespace fuzzy::kernels
