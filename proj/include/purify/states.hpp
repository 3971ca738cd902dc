#pragma once

#include <utility>
#include <vector>

#include "purify/kernels.hpp"
#include "purify/repspace.hpp"

// The decohered input family: a depolarized qubit rho = lambda |psi><psi| +
// (1-lambda) 1/2 per site, its block weights w_N(s) over the spin
// decomposition, the thermal block states rho_s(beta), and the single-site
// polarization gamma of each block.

namespace purify {

/// Channel parameter pair. lambda in (0,1) is the depolarizing weight,
/// beta in (0,inf) the pseudo-temperature; lambda = tanh(beta). Construct
/// through a factory so both fields stay consistent; the boundary values
/// are rejected (limits are handled analytically where they are needed,
/// never by constructing a boundary Noise).
struct Noise {
  double lambda = 0.0;
  double beta = 0.0;

  static Noise from_lambda(double lambda);
  static Noise from_beta(double beta);

  /// e^{-2 beta} = (1-lambda)/(1+lambda), the geometric decay of the
  /// occupation weights.
  double z() const { return (1.0 - lambda) / (1.0 + lambda); }
};

/// Thermal state of one spin block, diagonal in the occupation basis:
/// p_n proportional to e^{2 beta (n - s)}, n = 0..2s. The two_s = 0 block
/// is the trivial single weight {1}.
struct SpinBlockState {
  TwiceSpin s;
  std::vector<double> occupation_weights;
};

/// Block weights w_N(s) of N depolarized qubits, kept in log form and
/// materialized once. Support is ascending; entries more than 700 log-units
/// below the peak materialize as 0 (they contribute < 1e-300).
class WeightTable {
 public:
  WeightTable(int n_qubits, Noise noise, std::vector<TwiceSpin> support,
              std::vector<LogValue> log_weights);

  int n_qubits() const { return n_qubits_; }
  const Noise& noise() const { return noise_; }
  const std::vector<TwiceSpin>& support() const { return support_; }
  const std::vector<LogValue>& log_weights() const { return log_weights_; }
  const std::vector<double>& weights() const { return weights_; }

  LogValue log_weight(TwiceSpin s) const;
  double weight(TwiceSpin s) const;

  /// Index of the largest weight (the mode of the block distribution).
  std::size_t mode_index() const;

 private:
  int n_qubits_;
  Noise noise_;
  std::vector<TwiceSpin> support_;
  std::vector<LogValue> log_weights_;
  std::vector<double> weights_;
};

/// w_N(s) = sinh((2s+1)beta) / (sinh(beta) (2 cosh beta)^N) * dim K_{N,s},
/// evaluated entirely in the log domain. Zero off the support.
LogValue weight_log(int n_qubits, TwiceSpin s, const Noise& noise);

WeightTable weight_table(int n_qubits, const Noise& noise);

/// rho_s(beta) occupation weights p_n = e^{2 beta (n-s)} sinh(beta) /
/// sinh((2s+1)beta).
SpinBlockState block_state(TwiceSpin s, const Noise& noise);

/// gamma(rho_s(beta)) = (2s+1)/(2s) coth((2s+1)beta) - coth(beta)/(2s),
/// the mean single-site polarization of the block. Defined as 0 for
/// two_s = 0 (that block produces no output).
double gamma_block(TwiceSpin s, const Noise& noise);

/// sum_s w_N(s) f(2s/N) for a function f of the rescaled spin.
template <typename F>
double expect_under_weights(const WeightTable& table, F&& f) {
  std::vector<double> values(table.support().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f(static_cast<double>(table.support()[i].two_s) /
                  static_cast<double>(table.n_qubits()));
  }
  return kernels::dot(table.weights(), values);
}

template <typename F>
double expect_under_weights(int n_qubits, const Noise& noise, F&& f) {
  return expect_under_weights(weight_table(n_qubits, noise), std::forward<F>(f));
}

}  // namespace purify
