#pragma once

#include <vector>

#include "purify/states.hpp"

// Fidelities of the optimal N -> M purifier. Per spin block the device is
// the optimal symmetric cloner (2s < M) or a partial trace (M <= 2s); the
// reported figures of merit are the weighted sums over blocks.

namespace purify {

enum class Criterion { one, all };

struct FidelityBlock {
  int two_s = 0;
  double weight = 0.0;
  double fidelity = 0.0;
};

/// A figure of merit together with its per-block breakdown. value is the
/// exact weighted sum of the block fidelities, accumulated in ascending
/// two_s order. m_outputs == kInfiniteOutputs marks the M -> infinity limit.
struct FidelityReport {
  static constexpr int kInfiniteOutputs = -1;

  int n_inputs = 0;
  int m_outputs = 0;
  Criterion criterion = Criterion::one;
  double value = 0.0;
  std::vector<FidelityBlock> per_block;
};

/// One outcome of the natural purifier: with probability w_N(s) it emits
/// the 2s-qubit block state. The two_s = 0 outcome emits nothing; its
/// f_one is 1/2 (a completely mixed stand-in qubit) and its f_all is the
/// vacuous 1, flagged via empty_output.
struct InstrumentOutcome {
  int two_s = 0;
  double probability = 0.0;
  int output_count = 0;
  double f_one = 0.0;
  double f_all = 0.0;
  bool empty_output = false;
};

/// Largest polarization transfer ratio omega of a symmetric cp-map from M
/// qubits into the spin-s block: M/(2s) if 2s >= M, else (M+2)/(2s+2).
/// Both branches give 1 at 2s == M; two_s = 0 yields (M+2)/2.
double cloner_gain(int m_outputs, TwiceSpin s);

/// Single-output fidelity of the optimal purifier restricted to block s:
/// f_one = (1 + omega * (2s/M) * gamma(rho_s)) / 2. two_s = 0 gives 1/2.
double f_one(int m_outputs, const Noise& noise, TwiceSpin s);

/// 1 - f_one, evaluated in a cancellation-free form; this is what the
/// large-N convergence diagnostics consume.
double f_one_deficit(int m_outputs, const Noise& noise, TwiceSpin s);

/// M -> infinity limit of f_one (the cloning branch for every block).
double f_one_inf(const Noise& noise, TwiceSpin s);
double f_one_inf_deficit(const Noise& noise, TwiceSpin s);

/// Full-output fidelity of the optimal purifier restricted to block s.
/// Cloning branch (2s < M): (2s+1)/(M+1) * (1-e^{-2b})/(1-e^{-(4s+2)b}).
/// Reduction branch (M <= 2s):
///   sum_{K=M}^{2s} C(K,M) e^{2bK} / (C(2s,M) sum_{K=0}^{2s} e^{2bK}),
/// evaluated in the log domain.
double f_all(int m_outputs, const Noise& noise, TwiceSpin s);

/// F_one^max(N,M) = sum_s w_N(s) f_one(M, beta, s).
FidelityReport fidelity_one_max(int n_inputs, int m_outputs, const Noise& noise);

/// F_one^max(N, infinity): the infinite-rate limit.
FidelityReport fidelity_one_max_inf(int n_inputs, const Noise& noise);

/// F_one^max(N, 0): no demand on output number; equals the fidelity of the
/// best natural-purifier outcome, i.e. the 2s = N block.
double fidelity_one_max_zero(int n_inputs, const Noise& noise);

/// F_all^max(N,M) = sum_s w_N(s) f_all(M, beta, s).
FidelityReport fidelity_all_max(int n_inputs, int m_outputs, const Noise& noise);

/// The natural purifier as an instrument: one outcome per spin block.
/// The probability-weighted mean of f_one over outcomes equals
/// fidelity_one_max(N, 1).
std::vector<InstrumentOutcome> natural_instrument(int n_inputs, const Noise& noise);

}  // namespace purify
