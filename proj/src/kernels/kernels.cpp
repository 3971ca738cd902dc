#include "purify/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>

namespace purify::kernels {

namespace detail {

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double max_scalar(const double* a, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void cmatmul_scalar(const std::complex<double>* a,
                    const std::complex<double>* b, std::complex<double>* c,
                    std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    std::memset(crow, 0, 2 * n * sizeof(double));
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = ad[2 * (i * n + k)];
      const double ai = ad[2 * (i * n + k) + 1];
      const double* brow = bd + 2 * k * n;
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        const double br = brow[j];
        const double bi = brow[j + 1];
        crow[j] += ar * br - ai * bi;
        crow[j + 1] += ar * bi + ai * br;
      }
    }
  }
}

}  // namespace detail

namespace {

struct Table {
  Isa isa;
  double (*sum)(const double*, std::size_t);
  double (*max)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*cmatmul)(const std::complex<double>*, const std::complex<double>*,
                  std::complex<double>*, std::size_t);
};

constexpr Table kScalarTable{Isa::scalar, detail::sum_scalar,
                             detail::max_scalar, detail::dot_scalar,
                             detail::cmatmul_scalar};

Table pick_table() {
  const char* req = std::getenv("PURIFY_KERNELS");
  const std::string_view want = req ? req : "";
  if (want == "scalar") return kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
  if (detail::cpu_has_avx2() && (want.empty() || want == "avx2")) {
    return Table{Isa::avx2, detail::sum_avx2, detail::max_avx2,
                 detail::dot_avx2, detail::cmatmul_avx2};
  }
#endif
#if defined(__aarch64__)
  if (want.empty() || want == "neon") {
    return Table{Isa::neon, detail::sum_neon, detail::max_neon,
                 detail::dot_neon, detail::cmatmul_neon};
  }
#endif
  return kScalarTable;
}

const Table& table() {
  static const Table t = pick_table();
  return t;
}

}  // namespace

Isa active() { return table().isa; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

double sum(std::span<const double> a) { return table().sum(a.data(), a.size()); }

double max(std::span<const double> a) { return table().max(a.data(), a.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
  return table().dot(a.data(), b.data(), a.size());
}

void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t n) {
  table().cmatmul(a, b, c, n);
}

}  // namespace purify::kernels
