#include "purify/repspace.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "purify/kernels.hpp"

namespace purify {

std::vector<TwiceSpin> spin_support(int n_qubits) {
  if (n_qubits < 1) throw std::domain_error("spin_support: need at least one qubit");
  std::vector<TwiceSpin> support;
  support.reserve(static_cast<std::size_t>(n_qubits / 2) + 1);
  for (int t = n_qubits % 2; t <= n_qubits; t += 2) support.push_back(TwiceSpin{t});
  return support;
}

namespace {

bool on_support(int n_qubits, TwiceSpin s) {
  return s.two_s >= 0 && s.two_s <= n_qubits && (s.two_s % 2) == (n_qubits % 2);
}

}  // namespace

LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return LogValue{};
  const long double lg = std::lgamma(static_cast<long double>(n + 1)) -
                         std::lgamma(static_cast<long double>(k + 1)) -
                         std::lgamma(static_cast<long double>(n - k + 1));
  return LogValue::from_log(static_cast<double>(lg));
}

std::int64_t binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (n > 66) throw std::domain_error("binomial_exact: n > 66 overflows int64");
  if (k > n - k) k = n - k;
  // Multiplicative form; every prefix C(n-k+i, i) is integral, and the
  // unsigned 128-bit intermediate cannot overflow for n <= 66.
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) /
          static_cast<unsigned __int128>(i);
  }
  return static_cast<std::int64_t>(acc);
}

LogValue multiplicity_log(int n_qubits, TwiceSpin s) {
  if (n_qubits < 1) throw std::domain_error("multiplicity_log: need at least one qubit");
  if (!on_support(n_qubits, s)) return LogValue{};
  const int t = s.two_s;
  const std::int64_t k = (n_qubits - t) / 2;
  // (2s+1)/(N/2+s+1) * C(N, N/2-s), all factors positive.
  const double log_prefactor =
      std::log(static_cast<double>(t + 1)) -
      std::log(static_cast<double>((n_qubits + t) / 2 + 1));
  const LogValue binom = log_binomial(n_qubits, k);
  return LogValue::from_log(log_prefactor + binom.log_magnitude());
}

std::int64_t multiplicity_exact(int n_qubits, TwiceSpin s) {
  if (n_qubits < 1) throw std::domain_error("multiplicity_exact: need at least one qubit");
  if (!on_support(n_qubits, s)) return 0;
  const std::int64_t k = (n_qubits - s.two_s) / 2;
  return binomial_exact(n_qubits, k) - binomial_exact(n_qubits, k - 1);
}

double log_sum_exp(std::span<const double> x) {
  if (x.empty()) return -std::numeric_limits<double>::infinity();
  const double m = kernels::max(x);
  if (!std::isfinite(m)) return m;
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = std::exp(x[i] - m);
  return m + std::log(kernels::sum(shifted));
}

}  // namespace purify
