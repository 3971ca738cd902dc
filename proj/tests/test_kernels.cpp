#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "purify/kernels.hpp"

using purify::kernels::Isa;
namespace kd = purify::kernels::detail;

namespace {

std::vector<double> random_doubles(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

std::vector<std::complex<double>> random_complex(std::mt19937_64& gen,
                                                 std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::complex<double>> v(n);
  for (auto& x : v) x = {dist(gen), dist(gen)};
  return v;
}

bool simd_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return kd::cpu_has_avx2();
#elif defined(__aarch64__)
  return true;
#else
  return false;
#endif
}

double simd_sum(const double* a, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  return kd::sum_avx2(a, n);
#elif defined(__aarch64__)
  return kd::sum_neon(a, n);
#else
  return kd::sum_scalar(a, n);
#endif
}

double simd_max(const double* a, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  return kd::max_avx2(a, n);
#elif defined(__aarch64__)
  return kd::max_neon(a, n);
#else
  return kd::max_scalar(a, n);
#endif
}

double simd_dot(const double* a, const double* b, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  return kd::dot_avx2(a, b, n);
#elif defined(__aarch64__)
  return kd::dot_neon(a, b, n);
#else
  return kd::dot_scalar(a, b, n);
#endif
}

void simd_cmatmul(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  kd::cmatmul_avx2(a, b, c, n);
#elif defined(__aarch64__)
  kd::cmatmul_neon(a, b, c, n);
#else
  kd::cmatmul_scalar(a, b, c, n);
#endif
}

}  // namespace

TEST_CASE("active ISA reports a known name") {
  const Isa isa = purify::kernels::active();
  const auto name = purify::kernels::isa_name(isa);
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}

TEST_CASE("scalar reductions on trivial inputs") {
  CHECK(kd::sum_scalar(nullptr, 0) == 0.0);
  CHECK(kd::max_scalar(nullptr, 0) == -std::numeric_limits<double>::infinity());
  const double one = 1.5;
  CHECK(kd::sum_scalar(&one, 1) == 1.5);
  CHECK(kd::max_scalar(&one, 1) == 1.5);
  CHECK(kd::dot_scalar(&one, &one, 1) == 2.25);
}

TEST_CASE("scalar and SIMD reductions agree") {
  if (!simd_available()) return;
  std::mt19937_64 gen(12345);
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{4}, std::size_t{7}, std::size_t{8},
                        std::size_t{13}, std::size_t{64}, std::size_t{1001}}) {
    const auto a = random_doubles(gen, n);
    const auto b = random_doubles(gen, n);
    const double scale = static_cast<double>(n);
    CHECK(std::abs(kd::sum_scalar(a.data(), n) - simd_sum(a.data(), n)) <=
          1e-13 * scale);
    CHECK(kd::max_scalar(a.data(), n) == simd_max(a.data(), n));
    CHECK(std::abs(kd::dot_scalar(a.data(), b.data(), n) -
                   simd_dot(a.data(), b.data(), n)) <= 1e-13 * scale);
  }
}

TEST_CASE("SIMD reductions are deterministic") {
  if (!simd_available()) return;
  std::mt19937_64 gen(99);
  const auto a = random_doubles(gen, 777);
  const auto b = random_doubles(gen, 777);
  CHECK(simd_sum(a.data(), a.size()) == simd_sum(a.data(), a.size()));
  CHECK(simd_dot(a.data(), b.data(), a.size()) ==
        simd_dot(a.data(), b.data(), a.size()));
}

TEST_CASE("matrix kernel matches Eigen and the SIMD variant") {
  std::mt19937_64 gen(4242);
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{5}, std::size_t{8}, std::size_t{17},
                        std::size_t{33}}) {
    const auto a = random_complex(gen, n * n);
    const auto b = random_complex(gen, n * n);
    std::vector<std::complex<double>> c_scalar(n * n), c_simd(n * n);
    kd::cmatmul_scalar(a.data(), b.data(), c_scalar.data(), n);

    using Mat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                              Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const Mat> ma(a.data(), n, n);
    const Eigen::Map<const Mat> mb(b.data(), n, n);
    const Mat mc = ma * mb;
    for (std::size_t i = 0; i < n * n; ++i) {
      CHECK(std::abs(c_scalar[i] - mc.data()[i]) <= 1e-12 * static_cast<double>(n));
    }

    if (simd_available()) {
      simd_cmatmul(a.data(), b.data(), c_simd.data(), n);
      for (std::size_t i = 0; i < n * n; ++i) {
        CHECK(std::abs(c_scalar[i] - c_simd[i]) <= 1e-13 * static_cast<double>(n));
      }
    }
  }
}
