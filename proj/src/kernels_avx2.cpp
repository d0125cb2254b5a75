// Built with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "fuzzy_spectral/compensated.hpp"
#include "fuzzy_spectral/kernels.hpp"

namespace fuzzy::kernels {

namespace {

constexpr int kLanes = 4;

// exp(x) for x in [-745, 0]. Cody-Waite reduction x = n ln2 + r with
// |r| <= ln2/2, degree-13 Taylor polynomial for e^r (truncation < 1e-17
// relative), then scaling by 2^n split in two factors so results in the
// subnormal range are rounded once, like std::exp.
__m256d exp_negative(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);

  static constexpr std::array<double, 14> kInvFactorial = {
      1.0,
      1.0,
      1.0 / 2.0,
      1.0 / 6.0,
      1.0 / 24.0,
      1.0 / 120.0,
      1.0 / 720.0,
      1.0 / 5040.0,
      1.0 / 40320.0,
      1.0 / 362880.0,
      1.0 / 3628800.0,
      1.0 / 39916800.0,
      1.0 / 479001600.0,
      1.0 / 6227020800.0,
  };
  __m256d p = _mm256_set1_pd(kInvFactorial[13]);
  for (int k = 12; k >= 0; --k) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFactorial[k]));

  // n in [-1075, 0]; both halves stay >= -538, well inside the normal range.
  const __m256d n_lo = _mm256_floor_pd(_mm256_mul_pd(n, _mm256_set1_pd(0.5)));
  const __m256d n_hi = _mm256_sub_pd(n, n_lo);
  const auto pow2 = [](__m256d e) {
    const __m128i e32 = _mm256_cvtpd_epi32(e);
    __m256i bits = _mm256_cvtepi32_epi64(e32);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    return _mm256_castsi256_pd(bits);
  };
  return _mm256_mul_pd(_mm256_mul_pd(p, pow2(n_lo)), pow2(n_hi));
}

// Vector Kahan step, lane-wise.
inline void kahan_add(__m256d& sum, __m256d& comp, __m256d value) {
  const __m256d y = _mm256_sub_pd(value, comp);
  const __m256d t = _mm256_add_pd(sum, y);
  comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
  sum = t;
}

}  // namespace

HeatMoments heat_moments_avx2(std::span<const double> eigenvalues,
                              std::span<const double> weights, double t) {
  if (eigenvalues.size() != weights.size())
    throw std::invalid_argument("heat_moments: eigenvalue and weight spans differ in length");

  const std::size_t count = eigenvalues.size();
  const std::size_t vector_end = count - count % kLanes;
  const __m256d tv = _mm256_set1_pd(t);
  const __m256d limit = _mm256_set1_pd(kUnderflowExponent);
  const __m256d zero = _mm256_setzero_pd();

  __m256d trace_sum = zero, trace_comp = zero;
  __m256d weighted_sum = zero, weighted_comp = zero;
  for (std::size_t k = 0; k < vector_end; k += kLanes) {
    const __m256d eig = _mm256_loadu_pd(eigenvalues.data() + k);
    const __m256d w = _mm256_loadu_pd(weights.data() + k);
    const __m256d exponent = _mm256_mul_pd(eig, tv);
    const __m256d keep = _mm256_cmp_pd(exponent, limit, _CMP_LE_OQ);
    // Clamped lanes would leave the valid range of exp_negative; feed them 0.
    const __m256d arg = _mm256_and_pd(keep, _mm256_sub_pd(zero, exponent));
    const __m256d term = _mm256_and_pd(keep, _mm256_mul_pd(w, exp_negative(arg)));
    kahan_add(trace_sum, trace_comp, term);
    kahan_add(weighted_sum, weighted_comp, _mm256_mul_pd(term, eig));
  }

  alignas(32) std::array<double, kLanes> lane_trace{}, lane_trace_comp{};
  alignas(32) std::array<double, kLanes> lane_weighted{}, lane_weighted_comp{};
  _mm256_store_pd(lane_trace.data(), trace_sum);
  _mm256_store_pd(lane_trace_comp.data(), trace_comp);
  _mm256_store_pd(lane_weighted.data(), weighted_sum);
  _mm256_store_pd(lane_weighted_comp.data(), weighted_comp);

  KahanSum<double> trace;
  KahanSum<double> weighted;
  for (int lane = 0; lane < kLanes; ++lane) {
    trace += lane_trace[lane];
    trace += -lane_trace_comp[lane];
    weighted += lane_weighted[lane];
    weighted += -lane_weighted_comp[lane];
  }
  for (std::size_t k = vector_end; k < count; ++k) {
    const double exponent = eigenvalues[k] * t;
    if (exponent > kUnderflowExponent) continue;
    const double term = weights[k] * std::exp(-exponent);
    trace += term;
    weighted += term * eigenvalues[k];
  }
  return {trace.value(), weighted.value()};
}

}  // namespace fuzzy::kernels
