#pragma once

#include "fuzzy_spectral/spectrum.hpp"

namespace fuzzy {

struct HeatTracePoint {
  double t = 0.0;
  double trace = 0.0;
  double trace_t_derivative = 0.0;
};

/// P(t) = sum deg exp(-eigenvalue_sq t). t = 0 returns total_dim exactly.
double heat_trace(const DiracSpectrum& spectrum, double t);

/// dP/dt = -sum deg eigenvalue_sq exp(-eigenvalue_sq t), always <= 0.
double heat_trace_derivative(const DiracSpectrum& spectrum, double t);

/// Trace and derivative from a single pass over the spectrum.
HeatTracePoint heat_trace_point(const DiracSpectrum& spectrum, double t);

/// Two-term small-t expansion of the round-sphere Dirac heat trace,
/// area / (2 pi t) - 1/3.
double standard_asymptotic_trace(double t, double area);

}  // namespace fuzzy
