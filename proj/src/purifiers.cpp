#include "purify/purifiers.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "purify/kernels.hpp"
#include "purify/repspace.hpp"

namespace purify {

namespace {

void require_counts(int n_inputs, int m_outputs) {
  if (n_inputs < 1) throw std::domain_error("fidelity: need at least one input qubit");
  if (m_outputs < 1) throw std::domain_error("fidelity: need at least one output qubit");
}

// coth(beta) - 1 without cancellation; coth(beta) = 1/lambda exactly.
double coth_beta_minus_one(const Noise& noise) {
  return (1.0 - noise.lambda) / noise.lambda;
}

FidelityReport assemble(int n_inputs, int m_outputs, Criterion criterion,
                        const WeightTable& table,
                        const std::vector<double>& block_fidelities) {
  FidelityReport report;
  report.n_inputs = n_inputs;
  report.m_outputs = m_outputs;
  report.criterion = criterion;
  report.value = kernels::dot(table.weights(), block_fidelities);
  report.per_block.reserve(table.support().size());
  for (std::size_t i = 0; i < table.support().size(); ++i) {
    report.per_block.push_back(FidelityBlock{table.support()[i].two_s,
                                             table.weights()[i],
                                             block_fidelities[i]});
  }
  return report;
}

}  // namespace

double cloner_gain(int m_outputs, TwiceSpin s) {
  if (m_outputs < 1) throw std::domain_error("cloner_gain: M must be >= 1");
  if (s.two_s < 0) throw std::domain_error("cloner_gain: two_s must be >= 0");
  if (s.two_s >= m_outputs) {
    return static_cast<double>(m_outputs) / static_cast<double>(s.two_s);
  }
  return static_cast<double>(m_outputs + 2) / static_cast<double>(s.two_s + 2);
}

double f_one_deficit(int m_outputs, const Noise& noise, TwiceSpin s) {
  if (m_outputs < 1) throw std::domain_error("f_one: M must be >= 1");
  if (s.two_s < 0) throw std::domain_error("f_one: two_s must be >= 0");
  const double cb = coth_beta_minus_one(noise);
  const double t = static_cast<double>(s.two_s);
  if (s.two_s > m_outputs) {
    // 1 - f = (1 - gamma)/2 = [ (coth b - 1) - (2s+1)(coth((2s+1)b) - 1) ]
    //         / (2 * 2s).
    const double cs = coth_minus_one((t + 1.0) * noise.beta);
    return (cb - (t + 1.0) * cs) / (2.0 * t);
  }
  // 2s <= M:
  // 1 - f = [ 2(M-2s) + (M+2)((coth b - 1) - (2s+1)(coth((2s+1)b) - 1)) ]
  //         / (2 M (2s+2)); every summand is nonnegative.
  const double m = static_cast<double>(m_outputs);
  const double cs = coth_minus_one((t + 1.0) * noise.beta);
  return (2.0 * (m - t) + (m + 2.0) * (cb - (t + 1.0) * cs)) /
         (2.0 * m * (t + 2.0));
}

double f_one(int m_outputs, const Noise& noise, TwiceSpin s) {
  return 1.0 - f_one_deficit(m_outputs, noise, s);
}

double f_one_inf_deficit(const Noise& noise, TwiceSpin s) {
  if (s.two_s < 0) throw std::domain_error("f_one_inf: two_s must be >= 0");
  const double t = static_cast<double>(s.two_s);
  const double cb = coth_beta_minus_one(noise);
  const double cs = coth_minus_one((t + 1.0) * noise.beta);
  return (2.0 + cb - (t + 1.0) * cs) / (2.0 * (t + 2.0));
}

double f_one_inf(const Noise& noise, TwiceSpin s) {
  return 1.0 - f_one_inf_deficit(noise, s);
}

double f_all(int m_outputs, const Noise& noise, TwiceSpin s) {
  if (m_outputs < 1) throw std::domain_error("f_all: M must be >= 1");
  if (s.two_s < 0) throw std::domain_error("f_all: two_s must be >= 0");
  const double z = noise.z();
  if (s.two_s < m_outputs) {
    const double top = (1.0 - z) / (1.0 - std::pow(z, s.two_s + 1));
    return static_cast<double>(s.two_s + 1) / static_cast<double>(m_outputs + 1) *
           top;
  }
  // Reduction branch, log domain. The terms log C(K,M) + 2 beta K increase
  // with K, so the K = 2s term anchors the log-sum-exp.
  const int t = s.two_s;
  const double two_beta = 2.0 * noise.beta;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(t - m_outputs) + 1);
  for (int k = m_outputs; k <= t; ++k) {
    terms.push_back(log_binomial(k, m_outputs).log_magnitude() + two_beta * k);
  }
  const double log_num = log_sum_exp(terms);
  // log sum_{K=0}^{2s} e^{2bK} = 2b*2s + log((1 - z^{2s+1}) / (1 - z)).
  const double log_geom = two_beta * t + std::log1p(-std::pow(z, t + 1)) -
                          std::log1p(-z);
  const double log_den = log_binomial(t, m_outputs).log_magnitude() + log_geom;
  return std::exp(log_num - log_den);
}

FidelityReport fidelity_one_max(int n_inputs, int m_outputs, const Noise& noise) {
  require_counts(n_inputs, m_outputs);
  const WeightTable table = weight_table(n_inputs, noise);
  std::vector<double> fs(table.support().size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    fs[i] = f_one(m_outputs, noise, table.support()[i]);
  }
  return assemble(n_inputs, m_outputs, Criterion::one, table, fs);
}

FidelityReport fidelity_one_max_inf(int n_inputs, const Noise& noise) {
  require_counts(n_inputs, 1);
  const WeightTable table = weight_table(n_inputs, noise);
  std::vector<double> fs(table.support().size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    fs[i] = f_one_inf(noise, table.support()[i]);
  }
  FidelityReport report = assemble(n_inputs, FidelityReport::kInfiniteOutputs,
                                   Criterion::one, table, fs);
  return report;
}

double fidelity_one_max_zero(int n_inputs, const Noise& noise) {
  if (n_inputs < 1) throw std::domain_error("fidelity: need at least one input qubit");
  // Best possible natural-purifier output: the maximal block 2s = N.
  return f_one(1, noise, TwiceSpin{n_inputs});
}

FidelityReport fidelity_all_max(int n_inputs, int m_outputs, const Noise& noise) {
  require_counts(n_inputs, m_outputs);
  const WeightTable table = weight_table(n_inputs, noise);
  std::vector<double> fs(table.support().size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    fs[i] = f_all(m_outputs, noise, table.support()[i]);
  }
  return assemble(n_inputs, m_outputs, Criterion::all, table, fs);
}

std::vector<InstrumentOutcome> natural_instrument(int n_inputs, const Noise& noise) {
  if (n_inputs < 1) throw std::domain_error("natural_instrument: need at least one input qubit");
  const WeightTable table = weight_table(n_inputs, noise);
  const double z = noise.z();
  std::vector<InstrumentOutcome> outcomes;
  outcomes.reserve(table.support().size());
  for (std::size_t i = 0; i < table.support().size(); ++i) {
    const TwiceSpin s = table.support()[i];
    InstrumentOutcome out;
    out.two_s = s.two_s;
    out.probability = table.weights()[i];
    out.output_count = s.two_s;
    out.f_one = f_one(1, noise, s);
    if (s.two_s == 0) {
      out.f_all = 1.0;
      out.empty_output = true;
    } else {
      out.f_all = (1.0 - z) / (1.0 - std::pow(z, s.two_s + 1));
    }
    outcomes.push_back(out);
  }
  return outcomes;
}

}  // namespace purify
