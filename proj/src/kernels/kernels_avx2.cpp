// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after cpu_has_avx2() returned true.

#include <immintrin.h>

#include <cstring>
#include <limits>

#include "purify/kernels.hpp"

namespace purify::kernels::detail {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i];
  return acc;
}

double max_avx2(const double* a, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vm = _mm256_loadu_pd(a);
    for (i = 4; i + 4 <= n; i += 4) {
      vm = _mm256_max_pd(vm, _mm256_loadu_pd(a + i));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vm);
    m = lanes[0];
    for (int k = 1; k < 4; ++k) m = lanes[k] > m ? lanes[k] : m;
  }
  for (; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4),
                           acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void cmatmul_avx2(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    std::memset(crow, 0, 2 * n * sizeof(double));
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = ad[2 * (i * n + k)];
      const double ai = ad[2 * (i * n + k) + 1];
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      const double* brow = bd + 2 * k * n;
      std::size_t j = 0;
      // Two interleaved complex values per 256-bit lane:
      //   even slot: ar*br - ai*bi, odd slot: ar*bi + ai*br.
      for (; j + 4 <= 2 * n; j += 4) {
        const __m256d vb = _mm256_loadu_pd(brow + j);
        const __m256d vbs = _mm256_permute_pd(vb, 0b0101);
        __m256d vc = _mm256_loadu_pd(crow + j);
        vc = _mm256_add_pd(vc, _mm256_fmaddsub_pd(var, vb, _mm256_mul_pd(vai, vbs)));
        _mm256_storeu_pd(crow + j, vc);
      }
      for (; j < 2 * n; j += 2) {
        const double br = brow[j];
        const double bi = brow[j + 1];
        crow[j] += ar * br - ai * bi;
        crow[j + 1] += ar * bi + ai * br;
      }
    }
  }
}

}  // namespace purify::kernels::detail
