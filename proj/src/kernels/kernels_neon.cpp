// NEON kernel variants for aarch64 (AdvSIMD is baseline on ARMv8).

#include <arm_neon.h>

#include <cstring>
#include <limits>

#include "purify/kernels.hpp"

namespace purify::kernels::detail {

double sum_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(a + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
  }
  double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) acc += a[i];
  return acc;
}

double max_neon(const double* a, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t vm = vld1q_f64(a);
    for (i = 2; i + 2 <= n; i += 2) {
      vm = vmaxq_f64(vm, vld1q_f64(a + i));
    }
    m = vmaxvq_f64(vm);
  }
  for (; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void cmatmul_neon(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const float64x2_t sign = {-1.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    std::memset(crow, 0, 2 * n * sizeof(double));
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = ad[2 * (i * n + k)];
      const double ai = ad[2 * (i * n + k) + 1];
      const float64x2_t var = vdupq_n_f64(ar);
      const float64x2_t vai = vdupq_n_f64(ai);
      const double* brow = bd + 2 * k * n;
      // One complex value per 128-bit lane:
      //   re: ar*br - ai*bi, im: ar*bi + ai*br.
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        const float64x2_t vb = vld1q_f64(brow + j);
        const float64x2_t vbs = vextq_f64(vb, vb, 1);
        float64x2_t vc = vld1q_f64(crow + j);
        vc = vaddq_f64(vc, vfmaq_f64(vmulq_f64(var, vb),
                                     vmulq_f64(vai, vbs), sign));
        vst1q_f64(crow + j, vc);
      }
    }
  }
}

}  // namespace purify::kernels::detail
