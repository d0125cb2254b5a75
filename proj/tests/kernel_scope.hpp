#pragma once

#include <vector>

#include "fuzzy_spectral/kernels.hpp"

// Kernels available on this machine, and an RAII guard that switches the
// process-wide kernel for the duration of a test.
inline std::vector<fuzzy::kernels::Kind> available_kernels() {
  std::vector<fuzzy::kernels::Kind> kinds{fuzzy::kernels::Kind::scalar};
  if (fuzzy::kernels::supported(fuzzy::kernels::Kind::avx2)) kinds.push_back(fuzzy::kernels::Kind::avx2);
  return kinds;
}

class KernelScope {
 public:
  explicit KernelScope(fuzzy::kernels::Kind kind) : previous_(fuzzy::kernels::active()) {
    fuzzy::kernels::set_active(kind);
  }
  ~KernelScope() { fuzzy::kernels::set_active(previous_); }
  KernelScope(const KernelScope&) = delete;
  KernelScope& operator=(const KernelScope&) = delete;

 private:
  fuzzy::kernels::Kind previous_;
};
