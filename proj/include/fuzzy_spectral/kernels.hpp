#pragma once

#include <span>
#include <string_view>

namespace fuzzy::kernels {

/// Exponents x t above this contribute exactly zero to the heat sums.
inline constexpr double kUnderflowExponent = 745.0;

/// Zeroth and first moments of the heat weights at diffusion time t:
///   trace    = sum_k w_k exp(-x_k t)
///   weighted = sum_k w_k x_k exp(-x_k t)
struct HeatMoments {
  double trace = 0.0;
  double weighted = 0.0;
};

enum class Kind { scalar, avx2 };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view name);

bool supported(Kind kind);

/// Fastest kernel the running CPU supports.
Kind best_available();

/// Kernel used by the heat-trace functions. Defaults to best_available().
Kind active();

/// Selects the process-wide kernel. Throws std::invalid_argument if the CPU
/// cannot run it. Call before starting worker threads.
void set_active(Kind kind);

// Both variants expect eigenvalues in descending order so the smallest
// exponentials are accumulated first, with Kahan compensation. Eigenvalues
// must be >= 0 and t >= 0.
HeatMoments heat_moments_scalar(std::span<const double> eigenvalues,
                                std::span<const double> weights, double t);

HeatMoments heat_moments_avx2(std::span<const double> eigenvalues,
                              std::span<const double> weights, double t);

HeatMoments heat_moments(Kind kind, std::span<const double> eigenvalues,
                         std::span<const double> weights, double t);

}  // namespace fuzzy::kernels
