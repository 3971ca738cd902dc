#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

// Bookkeeping for the SU(2) block decomposition of N qubits: which total
// spins occur, with which multiplicity, plus the overflow-safe scalar
// helpers (log-domain combinatorics, stable hyperbolic forms) that the rest
// of the library is built on.

namespace purify {

/// Total spin stored as the integer 2s. Spins of N qubits may be
/// half-integral; keeping 2s integral makes supports and table indices
/// exact. Always two_s >= 0, and two_s == N (mod 2) with two_s <= N when
/// drawn from the support of N qubits.
struct TwiceSpin {
  int two_s = 0;

  constexpr auto operator<=>(const TwiceSpin&) const = default;

  /// Dimension 2s+1 of the spin-s irreducible representation.
  constexpr int dim() const { return two_s + 1; }
};

/// A real number held as sign and natural-log magnitude, so that products
/// like sinh((2s+1)beta) * dim K at N ~ 10^3 never leave the representable
/// range. sign == 0 encodes exact zero; log_magnitude is meaningless then.
class LogValue {
 public:
  constexpr LogValue() = default;

  static LogValue from_value(double v) {
    if (v == 0.0) return LogValue{};
    return LogValue{v > 0.0 ? 1 : -1, std::log(std::abs(v))};
  }

  static LogValue from_log(double log_magnitude, int sign = 1) {
    return LogValue{sign >= 0 ? 1 : -1, log_magnitude};
  }

  constexpr int sign() const { return sign_; }
  constexpr bool is_zero() const { return sign_ == 0; }
  constexpr double log_magnitude() const { return log_mag_; }

  /// Materialize. Overflows to +-inf / underflows to 0 like exp() does.
  double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogValue{};
    return LogValue{a.sign_ * b.sign_, a.log_mag_ + b.log_mag_};
  }

  friend LogValue operator/(LogValue a, LogValue b) {
    if (a.sign_ == 0) return LogValue{};
    return LogValue{a.sign_ * b.sign_, a.log_mag_ - b.log_mag_};
  }

 private:
  constexpr LogValue(int sign, double log_mag) : sign_(sign), log_mag_(log_mag) {}

  int sign_ = 0;
  double log_mag_ = 0.0;
};

/// Spins present in the decomposition of N qubits, ascending:
/// {two_s : two_s == N mod 2, 0 <= two_s <= N}. N must be >= 1.
std::vector<TwiceSpin> spin_support(int n_qubits);

/// Multiplicity dim K_{N,s} = (2s+1)/(N/2+s+1) * C(N, N/2-s) of the spin-s
/// block, as a log value. Zero (not an error) off the support.
LogValue multiplicity_log(int n_qubits, TwiceSpin s);

/// Exact-integer multiplicity via C(N,(N-two_s)/2) - C(N,(N-two_s)/2 - 1).
/// Supported up to n_qubits <= 66 (the int64 overflow bound); this is the
/// independent check for the log path.
std::int64_t multiplicity_exact(int n_qubits, TwiceSpin s);

/// log C(n,k). Zero LogValue when k < 0 or k > n. Backed by the long-double
/// lgamma from libm; the tests pin it against exact factorials and an exact
/// big-integer C(1000,500).
LogValue log_binomial(std::int64_t n, std::int64_t k);

/// Exact C(n,k) in int64; requires n <= 66.
std::int64_t binomial_exact(std::int64_t n, std::int64_t k);

// Stable hyperbolic helpers, all for x > 0. Direct sinh/cosh overflow
// around x ~ 710, which the weight formulas reach near N ~ 1400.

/// log(sinh x) = x + log1p(-e^{-2x}) - log 2.
inline double log_sinh(double x) {
  return x + std::log1p(-std::exp(-2.0 * x)) - 0.6931471805599453094172321214581766;
}

/// log(2 cosh x) = x + log1p(e^{-2x}).
inline double log_two_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)); }

/// coth(x) - 1 = 2 / (e^{2x} - 1); decays to 0 without cancellation.
inline double coth_minus_one(double x) { return 2.0 / std::expm1(2.0 * x); }

inline double coth(double x) { return 1.0 + coth_minus_one(x); }

/// log sum_i e^{x_i}, shifted by the max term. -inf for empty input.
double log_sum_exp(std::span<const double> x);

}  // namespace purify
