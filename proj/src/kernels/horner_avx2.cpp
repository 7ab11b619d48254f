#include <immintrin.h>

#include "neuberg/kernels.hpp"

namespace neuberg::kernels {

// Four lanes of doubles. With p < 2^26 every acc*x + c is below 2^52 and so
// exact; q = floor(v / p) may be off by one from rounding 1/p, which the two
// conditional corrections absorb.
void horner_mod_avx2(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                     std::span<std::uint32_t> out, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();

  std::size_t n = 0;
  for (; n + 4 <= xs.size(); n += 4) {
    const __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(xs.data() + n));
    const __m256d x = _mm256_cvtepi32_pd(xi);
    __m256d acc = zero;
    for (const std::uint32_t c : coeffs) {
      const __m256d v = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(static_cast<double>(c)));
      const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, vpinv));
      __m256d r = _mm256_fnmadd_pd(q, vp, v);
      r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
      r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
      acc = r;
    }
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + n), _mm256_cvttpd_epi32(acc));
  }
  if (n < xs.size()) horner_mod_scalar(coeffs, xs.subspan(n), out.subspan(n), p);
}

}  // namespace neuberg::kernels
