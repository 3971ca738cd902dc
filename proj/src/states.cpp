#include "purify/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace purify {

Noise Noise::from_lambda(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("Noise: lambda must lie strictly inside (0,1)");
  }
  return Noise{lambda, std::atanh(lambda)};
}

Noise Noise::from_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("Noise: beta must lie strictly inside (0,inf)");
  }
  const double lambda = std::tanh(beta);
  if (lambda >= 1.0) {
    throw std::domain_error("Noise: beta so large that lambda rounds to 1");
  }
  return Noise{lambda, beta};
}

LogValue weight_log(int n_qubits, TwiceSpin s, const Noise& noise) {
  const LogValue mult = multiplicity_log(n_qubits, s);
  if (mult.is_zero()) return LogValue{};
  const double b = noise.beta;
  const double lw = log_sinh((s.two_s + 1) * b) - log_sinh(b) -
                    n_qubits * log_two_cosh(b) + mult.log_magnitude();
  return LogValue::from_log(lw);
}

WeightTable::WeightTable(int n_qubits, Noise noise, std::vector<TwiceSpin> support,
                         std::vector<LogValue> log_weights)
    : n_qubits_(n_qubits),
      noise_(noise),
      support_(std::move(support)),
      log_weights_(std::move(log_weights)) {
  weights_.resize(log_weights_.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (const LogValue& lw : log_weights_) {
    if (!lw.is_zero()) max_log = std::max(max_log, lw.log_magnitude());
  }
  for (std::size_t i = 0; i < log_weights_.size(); ++i) {
    const LogValue& lw = log_weights_[i];
    if (lw.is_zero() || lw.log_magnitude() - max_log < -700.0) {
      weights_[i] = 0.0;
    } else {
      // Probabilities: the log path can overshoot 1 by an ulp.
      weights_[i] = std::min(std::exp(lw.log_magnitude()), 1.0);
    }
  }
}

LogValue WeightTable::log_weight(TwiceSpin s) const {
  if (s.two_s < 0 || s.two_s > n_qubits_ || (s.two_s % 2) != (n_qubits_ % 2)) {
    return LogValue{};
  }
  return log_weights_[static_cast<std::size_t>(s.two_s / 2)];
}

double WeightTable::weight(TwiceSpin s) const {
  if (s.two_s < 0 || s.two_s > n_qubits_ || (s.two_s % 2) != (n_qubits_ % 2)) {
    return 0.0;
  }
  return weights_[static_cast<std::size_t>(s.two_s / 2)];
}

std::size_t WeightTable::mode_index() const {
  return static_cast<std::size_t>(
      std::max_element(weights_.begin(), weights_.end()) - weights_.begin());
}

WeightTable weight_table(int n_qubits, const Noise& noise) {
  std::vector<TwiceSpin> support = spin_support(n_qubits);
  std::vector<LogValue> logs;
  logs.reserve(support.size());
  for (TwiceSpin s : support) logs.push_back(weight_log(n_qubits, s, noise));
  return WeightTable(n_qubits, noise, std::move(support), std::move(logs));
}

SpinBlockState block_state(TwiceSpin s, const Noise& noise) {
  if (s.two_s < 0) throw std::domain_error("block_state: two_s must be >= 0");
  if (s.two_s == 0) return SpinBlockState{s, {1.0}};
  const double z = noise.z();
  std::vector<double> p(static_cast<std::size_t>(s.two_s) + 1);
  // Top weight first, then the exact geometric descent p_{n-1} = z p_n,
  // so the ratio invariant p_{n+1}/p_n = e^{2 beta} holds by construction.
  p.back() = (1.0 - z) / (1.0 - std::pow(z, s.two_s + 1));
  for (int n = s.two_s - 1; n >= 0; --n) {
    p[static_cast<std::size_t>(n)] = p[static_cast<std::size_t>(n) + 1] * z;
  }
  return SpinBlockState{s, std::move(p)};
}

double gamma_block(TwiceSpin s, const Noise& noise) {
  if (s.two_s < 0) throw std::domain_error("gamma_block: two_s must be >= 0");
  if (s.two_s == 0) return 0.0;
  const double t = static_cast<double>(s.two_s);
  // coth(beta) = 1/lambda exactly for lambda = tanh(beta).
  return (t + 1.0) / t * coth((t + 1.0) * noise.beta) - 1.0 / (t * noise.lambda);
}

}  // namespace purify
