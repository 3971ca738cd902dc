#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Array kernels shared by the closed-form and dense-matrix code paths.
// Every kernel has a scalar reference implementation and, where the build
// target supports it, a SIMD variant (AVX2 on x86-64, NEON on aarch64).
// The variant is chosen once at startup from the CPU features; setting
// PURIFY_KERNELS=scalar|avx2|neon in the environment overrides the choice
// (falling back to scalar when the requested ISA is unavailable).
//
// All kernels are deterministic: a given (input, ISA) pair always produces
// bit-identical output. Scalar and SIMD variants may differ in the last few
// ulps because the reduction trees differ; the equivalence tests bound that
// difference.

namespace purify::kernels {

enum class Isa { scalar, avx2, neon };

Isa active();
std::string_view isa_name(Isa isa);

/// Sum of all elements. Empty input sums to 0.
double sum(std::span<const double> a);

/// Maximum element; -infinity for empty input.
double max(std::span<const double> a);

/// Dot product; spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

/// c = a * b for square row-major complex matrices of dimension n.
/// c must not alias a or b.
void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t n);

namespace detail {

double sum_scalar(const double* a, std::size_t n);
double max_scalar(const double* a, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
void cmatmul_scalar(const std::complex<double>* a,
                    const std::complex<double>* b, std::complex<double>* c,
                    std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2();
double sum_avx2(const double* a, std::size_t n);
double max_avx2(const double* a, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
void cmatmul_avx2(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t n);
#endif

#if defined(__aarch64__)
double sum_neon(const double* a, std::size_t n);
double max_neon(const double* a, std::size_t n);
double dot_neon(const double* a, const double* b, std::size_t n);
void cmatmul_neon(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t n);
#endif

}  // namespace detail

}  // namespace purify::kernels
