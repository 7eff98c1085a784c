// AVX2 variant of the tau-grid kernel; compiled with -mavx2 and entered
// only after a runtime cpuid check. Vector sin/cos come from libmvec.

#include "entangler/kernels.hpp"

#if defined(ENTANGLER_HAVE_AVX2)

#include <immintrin.h>

extern "C" __m256d _ZGVdN4v_sin(__m256d);
extern "C" __m256d _ZGVdN4v_cos(__m256d);

namespace entangler::kernels {

void closed_form_grid_avx2(const double* tau, std::size_t n, double* c1,
                           double* c2_im, double* c3, double* c4_im) {
  const __m256d third = _mm256_set1_pd(1.0 / 3.0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(tau + i);
    const __m256d ct = _ZGVdN4v_cos(t);
    const __m256d st = _ZGVdN4v_sin(t);
    const __m256d c2t = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_mul_pd(ct, ct)), one);
    const __m256d s2t = _mm256_mul_pd(two, _mm256_mul_pd(st, ct));

    _mm256_storeu_pd(c1 + i,
        _mm256_mul_pd(third, _mm256_add_pd(_mm256_mul_pd(two, ct), c2t)));
    _mm256_storeu_pd(c2_im + i,
        _mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), third),
                      _mm256_add_pd(st, s2t)));
    _mm256_storeu_pd(c3 + i,
        _mm256_mul_pd(third, _mm256_sub_pd(c2t, ct)));
    _mm256_storeu_pd(c4_im + i,
        _mm256_mul_pd(third, _mm256_sub_pd(_mm256_mul_pd(two, st), s2t)));
  }
  if (i < n)
    closed_form_grid_scalar(tau + i, n - i, c1 + i, c2_im + i, c3 + i,
                            c4_im + i);
}

}  // namespace entangler::kernels

#endif  // ENTANGLER_HAVE_AVX2
