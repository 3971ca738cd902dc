#include "purify/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "purify/kernels.hpp"

namespace purify::oracle {

namespace {

constexpr int kMaxOperatorQubits = 10;
constexpr int kMaxFidelityInputs = 8;
constexpr int kMaxFidelityOutputs = 6;

int popcount(std::size_t b) { return std::popcount(b); }

Complex trace_product(const DenseOperator& a, const DenseOperator& b) {
  const std::size_t d = a.dim();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      acc += a.at(i, j) * b.at(j, i);
    }
  }
  return acc;
}

using EigenMap =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

}  // namespace

DenseOperator::DenseOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxOperatorQubits) {
    throw std::domain_error("DenseOperator: dimension capped at 2^10");
  }
  a_.assign(dim() * dim(), Complex{0.0, 0.0});
}

DenseOperator DenseOperator::identity(int n_qubits) {
  DenseOperator op(n_qubits);
  for (std::size_t i = 0; i < op.dim(); ++i) op.at(i, i) = 1.0;
  return op;
}

Complex DenseOperator::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += at(i, i);
  return acc;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(n_qubits_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      out.at(i, j) = std::conj(at(j, i));
    }
  }
  return out;
}

void DenseOperator::scale(Complex factor) {
  for (Complex& v : a_) v *= factor;
}

void DenseOperator::add_scaled_identity(Complex shift) {
  for (std::size_t i = 0; i < dim(); ++i) at(i, i) += shift;
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    m = std::max(m, std::abs(a_[i] - other.a_[i]));
  }
  return m;
}

double DenseOperator::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return m;
}

std::vector<double> DenseOperator::eigenvalues() const {
  const auto d = static_cast<Eigen::Index>(dim());
  EigenMap m(a_.data(), d, d);
  Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + d);
  return out;
}

double DenseOperator::min_eigenvalue() const { return eigenvalues().front(); }

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  DenseOperator c(a.n_qubits());
  kernels::cmatmul(a.data(), b.data(), c.data(), a.dim());
  return c;
}

DenseOperator dense_product_state(int n_qubits, const Noise& noise) {
  if (n_qubits < 1 || n_qubits > kMaxOperatorQubits) {
    throw std::domain_error("dense_product_state: N must be in 1..10");
  }
  DenseOperator rho(n_qubits);
  const double up = (1.0 + noise.lambda) / 2.0;
  const double down = (1.0 - noise.lambda) / 2.0;
  for (std::size_t b = 0; b < rho.dim(); ++b) {
    const int ones = popcount(b);
    rho.at(b, b) = std::pow(up, n_qubits - ones) * std::pow(down, ones);
  }
  return rho;
}

DenseOperator dense_tensor_power(const SingleQubitMatrix& q, int n_qubits) {
  DenseOperator out(n_qubits);
  const std::size_t d = out.dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Complex v = 1.0;
      for (int j = 0; j < n_qubits; ++j) {
        const std::size_t rb = (r >> j) & 1u;
        const std::size_t cb = (c >> j) & 1u;
        v *= q[rb * 2 + cb];
      }
      out.at(r, c) = v;
    }
  }
  return out;
}

SpinOps total_spin_ops(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxOperatorQubits) {
    throw std::domain_error("total_spin_ops: N must be in 1..10");
  }
  DenseOperator l1(n_qubits), l2(n_qubits), l3(n_qubits);
  const std::size_t d = std::size_t{1} << n_qubits;
  for (std::size_t b = 0; b < d; ++b) {
    l3.at(b, b) = 0.5 * (n_qubits - 2 * popcount(b));
    for (int j = 0; j < n_qubits; ++j) {
      const std::size_t m = std::size_t{1} << j;
      const std::size_t flipped = b ^ m;
      l1.at(flipped, b) += 0.5;
      // sigma_2 maps psi -> i phi and phi -> -i psi.
      l2.at(flipped, b) += (b & m) ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
    }
  }
  DenseOperator lsq = multiply(l1, l1);
  const DenseOperator l2sq = multiply(l2, l2);
  const DenseOperator l3sq = multiply(l3, l3);
  for (std::size_t i = 0; i < d * d; ++i) {
    lsq.data()[i] += l2sq.data()[i] + l3sq.data()[i];
  }
  return SpinOps{std::move(l1), std::move(l2), std::move(l3), std::move(lsq)};
}

DenseOperator casimir_projector(int n_qubits, TwiceSpin s,
                                const DenseOperator& l_squared) {
  const std::vector<TwiceSpin> support = spin_support(n_qubits);
  if (std::find(support.begin(), support.end(), s) == support.end()) {
    throw std::domain_error("casimir_projector: spin not in the support");
  }
  const auto casimir = [](TwiceSpin t) {
    return static_cast<double>(t.two_s) * (t.two_s + 2) / 4.0;
  };
  DenseOperator p = DenseOperator::identity(n_qubits);
  for (TwiceSpin other : support) {
    if (other == s) continue;
    DenseOperator factor = l_squared;
    factor.add_scaled_identity(-casimir(other));
    factor.scale(1.0 / (casimir(s) - casimir(other)));
    p = multiply(p, factor);
  }
  return p;
}

DenseOperator casimir_projector(int n_qubits, TwiceSpin s) {
  return casimir_projector(n_qubits, s, total_spin_ops(n_qubits).l_squared);
}

double oracle_weight(int n_qubits, TwiceSpin s, const Noise& noise) {
  const DenseOperator p = casimir_projector(n_qubits, s);
  const DenseOperator rho = dense_product_state(n_qubits, noise);
  return trace_product(p, rho).real();
}

DenseOperator symmetrizer(int m_qubits) {
  if (m_qubits < 0 || m_qubits > kMaxOperatorQubits) {
    throw std::domain_error("symmetrizer: M must be in 0..10");
  }
  DenseOperator s(m_qubits);
  if (m_qubits == 0) {
    s.at(0, 0) = 1.0;
    return s;
  }
  std::vector<int> perm(static_cast<std::size_t>(m_qubits));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t n_perms = 0;
  do {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      std::size_t target = 0;
      for (int j = 0; j < m_qubits; ++j) {
        if ((b >> perm[static_cast<std::size_t>(j)]) & 1u) {
          target |= std::size_t{1} << j;
        }
      }
      s.at(target, b) += 1.0;
    }
    ++n_perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  s.scale(1.0 / static_cast<double>(n_perms));
  return s;
}

DenseOperator cloner_predual_apply(TwiceSpin s, int m_qubits,
                                   const DenseOperator& theta) {
  if (theta.n_qubits() != s.two_s) {
    throw std::invalid_argument("cloner_predual_apply: theta acts on 2s qubits");
  }
  if (m_qubits <= s.two_s) {
    throw std::domain_error("cloner_predual_apply: needs M > 2s");
  }
  if (m_qubits > 8) throw std::domain_error("cloner_predual_apply: M capped at 8");
  {
    const DenseOperator s_in = symmetrizer(s.two_s);
    const DenseOperator projected = multiply(multiply(s_in, theta), s_in);
    if (projected.max_abs_diff(theta) > 1e-9) {
      throw std::invalid_argument(
          "cloner_predual_apply: theta is not supported on the Bose subspace");
    }
  }
  const int pad = m_qubits - s.two_s;
  DenseOperator embedded(m_qubits);
  const std::size_t d_in = theta.dim();
  const std::size_t d_pad = std::size_t{1} << pad;
  for (std::size_t rh = 0; rh < d_in; ++rh) {
    for (std::size_t ch = 0; ch < d_in; ++ch) {
      const Complex v = theta.at(rh, ch);
      if (v == Complex{0.0, 0.0}) continue;
      for (std::size_t low = 0; low < d_pad; ++low) {
        embedded.at((rh << pad) | low, (ch << pad) | low) = v;
      }
    }
  }
  const DenseOperator sym = symmetrizer(m_qubits);
  DenseOperator out = multiply(multiply(sym, embedded), sym);
  out.scale(static_cast<double>(s.two_s + 1) / static_cast<double>(m_qubits + 1));
  return out;
}

DenseOperator reduce_predual_apply(TwiceSpin s, int m_qubits,
                                   const DenseOperator& theta) {
  if (theta.n_qubits() != s.two_s) {
    throw std::invalid_argument("reduce_predual_apply: theta acts on 2s qubits");
  }
  if (m_qubits < 0 || m_qubits > s.two_s) {
    throw std::domain_error("reduce_predual_apply: needs 0 <= M <= 2s");
  }
  const int traced = s.two_s - m_qubits;
  DenseOperator out(m_qubits);
  const std::size_t d_out = out.dim();
  const std::size_t d_traced = std::size_t{1} << traced;
  for (std::size_t r = 0; r < d_out; ++r) {
    for (std::size_t c = 0; c < d_out; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < d_traced; ++t) {
        acc += theta.at((t << m_qubits) | r, (t << m_qubits) | c);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

DenseOperator embed_block_state(TwiceSpin s, const Noise& noise) {
  if (s.two_s > kMaxOperatorQubits) {
    throw std::domain_error("embed_block_state: 2s capped at 10");
  }
  const SpinBlockState state = block_state(s, noise);
  DenseOperator out(s.two_s);
  const std::size_t d = out.dim();
  // Bucket basis indices by the number of phi factors (set bits); the
  // occupation n counts psi factors.
  std::vector<std::vector<std::size_t>> buckets(
      static_cast<std::size_t>(s.two_s) + 1);
  for (std::size_t b = 0; b < d; ++b) {
    buckets[static_cast<std::size_t>(popcount(b))].push_back(b);
  }
  for (int n = 0; n <= s.two_s; ++n) {
    const auto& bucket = buckets[static_cast<std::size_t>(s.two_s - n)];
    const double v = state.occupation_weights[static_cast<std::size_t>(n)] /
                     static_cast<double>(bucket.size());
    for (std::size_t b1 : bucket) {
      for (std::size_t b2 : bucket) {
        out.at(b1, b2) = v;
      }
    }
  }
  return out;
}

namespace {

SingleQubitMatrix identity_qubit() {
  return SingleQubitMatrix{Complex{1.0, 0.0}, Complex{0.0, 0.0},
                           Complex{0.0, 0.0}, Complex{1.0, 0.0}};
}

// <psi_u^(M)| out |psi_u^(M)> and the site-averaged <psi_u| marginal |psi_u>
// for the target vector psi_u = first column of u.
OracleFidelities measure_against_target(const DenseOperator& out,
                                        const SingleQubitMatrix& u) {
  const int m = out.n_qubits();
  const std::size_t d = out.dim();
  const Complex psi0 = u[0];
  const Complex psi1 = u[2];
  std::vector<Complex> target(d);
  for (std::size_t b = 0; b < d; ++b) {
    Complex v = 1.0;
    for (int j = 0; j < m; ++j) v *= ((b >> j) & 1u) ? psi1 : psi0;
    target[b] = v;
  }
  Complex f_all = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      f_all += std::conj(target[r]) * out.at(r, c) * target[c];
    }
  }
  // One-site marginals: sum over the other factors with one bit pinned.
  double f_one_acc = 0.0;
  for (int j = 0; j < m; ++j) {
    Complex marg[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    const std::size_t mask = std::size_t{1} << j;
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t a = (r >> j) & 1u;
      for (int bbit = 0; bbit < 2; ++bbit) {
        const std::size_t c = (r & ~mask) | (static_cast<std::size_t>(bbit) << j);
        marg[a][static_cast<std::size_t>(bbit)] += out.at(r, c);
      }
    }
    const Complex psi[2] = {psi0, psi1};
    Complex f = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        f += std::conj(psi[a]) * marg[a][b] * psi[b];
      }
    }
    f_one_acc += f.real();
  }
  return OracleFidelities{f_one_acc / m, f_all.real()};
}

}  // namespace

OracleFidelities oracle_fidelities_rotated(int n_inputs, int m_outputs,
                                           const Noise& noise,
                                           const SingleQubitMatrix& u) {
  if (n_inputs < 1 || n_inputs > kMaxFidelityInputs) {
    throw std::domain_error("oracle_fidelities: N must be in 1..8");
  }
  if (m_outputs < 1 || m_outputs > kMaxFidelityOutputs) {
    throw std::domain_error("oracle_fidelities: M must be in 1..6");
  }
  // Rotated single-qubit state u rho u*.
  const double up = (1.0 + noise.lambda) / 2.0;
  const double down = (1.0 - noise.lambda) / 2.0;
  SingleQubitMatrix rho_u{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      rho_u[static_cast<std::size_t>(r * 2 + c)] =
          u[static_cast<std::size_t>(r * 2)] * up *
              std::conj(u[static_cast<std::size_t>(c * 2)]) +
          u[static_cast<std::size_t>(r * 2 + 1)] * down *
              std::conj(u[static_cast<std::size_t>(c * 2 + 1)]);
    }
  }
  const DenseOperator input = dense_tensor_power(rho_u, n_inputs);
  const SpinOps ops = total_spin_ops(n_inputs);

  OracleFidelities totals;
  for (TwiceSpin s : spin_support(n_inputs)) {
    const DenseOperator projector = casimir_projector(n_inputs, s, ops.l_squared);
    const double w = trace_product(projector, input).real();

    DenseOperator theta = embed_block_state(s, noise);
    if (s.two_s > 0) {
      const DenseOperator u_power = dense_tensor_power(u, s.two_s);
      theta = multiply(multiply(u_power, theta), u_power.adjoint());
    }
    const DenseOperator out = s.two_s < m_outputs
                                  ? cloner_predual_apply(s, m_outputs, theta)
                                  : reduce_predual_apply(s, m_outputs, theta);
    const OracleFidelities block = measure_against_target(out, u);
    totals.f_one += w * block.f_one;
    totals.f_all += w * block.f_all;
  }
  return totals;
}

OracleFidelities oracle_fidelities(int n_inputs, int m_outputs,
                                   const Noise& noise) {
  return oracle_fidelities_rotated(n_inputs, m_outputs, noise, identity_qubit());
}

SingleQubitMatrix random_su2(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const auto uniform = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  // Unit quaternion -> SU(2).
  const double u1 = uniform();
  const double u2 = uniform();
  const double u3 = uniform();
  const double twopi = 2.0 * std::numbers::pi;
  const double r1 = std::sqrt(1.0 - u1);
  const double r2 = std::sqrt(u1);
  const Complex a{r1 * std::sin(twopi * u2), r1 * std::cos(twopi * u2)};
  const Complex b{r2 * std::sin(twopi * u3), r2 * std::cos(twopi * u3)};
  return SingleQubitMatrix{a, -std::conj(b), b, std::conj(a)};
}

InstrumentHistogram sample_instrument(int n_qubits, const Noise& noise,
                                      std::uint64_t seed, std::int64_t count) {
  if (n_qubits < 1 || n_qubits > 2000) {
    throw std::domain_error("sample_instrument: N must be in 1..2000");
  }
  if (count < 1) throw std::domain_error("sample_instrument: count must be >= 1");
  const WeightTable table = weight_table(n_qubits, noise);

  std::vector<double> cumulative(table.weights().size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    acc += table.weights()[i];
    cumulative[i] = acc;
  }

  InstrumentHistogram hist;
  hist.support = table.support();
  hist.weights = table.weights();
  hist.counts.assign(table.weights().size(), 0);
  hist.total = count;

  std::mt19937_64 gen(seed);
  for (std::int64_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++hist.counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  hist.frequencies.resize(hist.counts.size());
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    hist.frequencies[i] = static_cast<double>(hist.counts[i]) /
                          static_cast<double>(count);
  }
  return hist;
}

}  // namespace purify::oracle
