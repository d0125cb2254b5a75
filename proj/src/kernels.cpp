#include "fuzzy_spectral/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace fuzzy::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FUZZY_SPECTRAL_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Kind>& active_slot() {
  static std::atomic<Kind> slot{best_available()};
  return slot;
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::scalar: return "scalar";
    case Kind::avx2: return "avx2";
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  if (name == "scalar") return Kind::scalar;
  if (name == "avx2") return Kind::avx2;
  if (name == "auto") return best_available();
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "' (scalar|avx2|auto)");
}

bool supported(Kind kind) {
  switch (kind) {
    case Kind::scalar: return true;
    case Kind::avx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Kind best_available() { return supported(Kind::avx2) ? Kind::avx2 : Kind::scalar; }

Kind active() { return active_slot().load(std::memory_order_relaxed); }

void set_active(Kind kind) {
  if (!supported(kind))
    throw std::invalid_argument("kernel '" + std::string(to_string(kind)) +
                                "' is not supported on this CPU");
  active_slot().store(kind, std::memory_order_relaxed);
}

HeatMoments heat_moments(Kind kind, std::span<const double> eigenvalues,
                         std::span<const double> weights, double t) {
  switch (kind) {
    case Kind::avx2:
#if defined(FUZZY_SPECTRAL_HAVE_AVX2)
      return heat_moments_avx2(eigenvalues, weights, t);
#else
      throw std::invalid_argument("avx2 kernel not compiled in");
#endif
    case Kind::scalar: break;
  }
  return heat_moments_scalar(eigenvalues, weights, t);
}

}  // namespace fuzzy::kernels
