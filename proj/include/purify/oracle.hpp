#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "purify/states.hpp"

// Dense-matrix ground truth on (C^2)^(tensor n) for small n. Everything the
// closed forms claim is recomputed here from first principles: tensor-power
// states, angular momentum operators, Casimir block projectors, the
// symmetrizer, and the optimal cloning / reduction channels. Dimensions are
// capped at 2^10 for operators and 2^8 inputs for full fidelity runs.

namespace purify::oracle {

using Complex = std::complex<double>;

/// Single-qubit operator in row-major order {a00, a01, a10, a11}.
using SingleQubitMatrix = std::array<Complex, 4>;

/// Row-major complex matrix on n qubits (dimension 2^n; n = 0 is the
/// trivial one-dimensional space). Basis convention: tensor factor 0 is the
/// most significant bit of the index, bit value 0 is the favored state psi.
class DenseOperator {
 public:
  explicit DenseOperator(int n_qubits);
  static DenseOperator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }

  Complex& at(std::size_t row, std::size_t col) { return a_[row * dim() + col]; }
  const Complex& at(std::size_t row, std::size_t col) const {
    return a_[row * dim() + col];
  }

  Complex* data() { return a_.data(); }
  const Complex* data() const { return a_.data(); }

  Complex trace() const;
  DenseOperator adjoint() const;
  void scale(Complex factor);
  void add_scaled_identity(Complex shift);

  /// Largest |entry| of (*this - other); dimensions must match.
  double max_abs_diff(const DenseOperator& other) const;

  /// Largest |A - A^dagger| entry.
  double hermiticity_defect() const;

  /// Smallest eigenvalue of the Hermitian part (self-adjoint solve).
  double min_eigenvalue() const;

  /// Eigenvalues of the Hermitian part, ascending.
  std::vector<double> eigenvalues() const;

 private:
  int n_qubits_;
  std::vector<Complex> a_;
};

/// c = a * b through the dispatched matrix kernel.
DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);

/// rho(beta)^(tensor N) = diag products of ((1+lambda)/2, (1-lambda)/2).
DenseOperator dense_product_state(int n_qubits, const Noise& noise);

/// N-fold tensor power of an arbitrary single-qubit operator.
DenseOperator dense_tensor_power(const SingleQubitMatrix& q, int n_qubits);

struct SpinOps {
  DenseOperator l1, l2, l3, l_squared;
};

/// Total angular momentum: L_k = (1/2) sum_i sigma_k^(i), and
/// L^2 = L1^2 + L2^2 + L3^2.
SpinOps total_spin_ops(int n_qubits);

/// Isotypic projector onto total spin s, as the Lagrange interpolation
/// polynomial in L^2 over the eigenvalues s'(s'+1), s' in the support.
/// Off-support s is rejected.
DenseOperator casimir_projector(int n_qubits, TwiceSpin s);
DenseOperator casimir_projector(int n_qubits, TwiceSpin s,
                                const DenseOperator& l_squared);

/// tr(P_s rho^(tensor N)); the dense anchor for weight_log.
double oracle_weight(int n_qubits, TwiceSpin s, const Noise& noise);

/// Projector onto the Bose (fully symmetric) subspace: the average of all
/// M! permutation unitaries. Rank M+1.
DenseOperator symmetrizer(int m_qubits);

/// Predual of the optimal 2s -> M cloner for M > 2s:
///   theta -> (2s+1)/(M+1) S_M (theta x 1^{(M-2s)}) S_M.
/// theta must be supported on the Bose subspace of 2s qubits.
DenseOperator cloner_predual_apply(TwiceSpin s, int m_qubits,
                                   const DenseOperator& theta);

/// Predual for M <= 2s: partial trace over the first 2s - M factors.
DenseOperator reduce_predual_apply(TwiceSpin s, int m_qubits,
                                   const DenseOperator& theta);

/// Block state rho_s(beta) embedded in (C^2)^(tensor 2s): sum_n p_n |n><n|
/// over the normalized symmetrized occupation vectors.
DenseOperator embed_block_state(TwiceSpin s, const Noise& noise);

struct OracleFidelities {
  double f_one = 0.0;
  double f_all = 0.0;
};

/// Full dense evaluation of both figures of merit for the optimal N -> M
/// purifier: per block, extract the weight from tr(P_s rho^N), push the
/// embedded block state through the cloning or reduction channel, and
/// measure against psi^(tensor M) and the averaged one-site marginal.
/// Guards: N <= 8, M <= 6.
OracleFidelities oracle_fidelities(int n_inputs, int m_outputs, const Noise& noise);

/// Same evaluation with every ingredient conjugated by u^(tensor .): input
/// state u rho u*, block states rotated accordingly, target u psi. For any
/// unitary u the result must match the unrotated run; this is the
/// covariance spot-check.
OracleFidelities oracle_fidelities_rotated(int n_inputs, int m_outputs,
                                           const Noise& noise,
                                           const SingleQubitMatrix& u);

/// Haar-random SU(2) element from a seeded generator (deterministic).
SingleQubitMatrix random_su2(std::uint64_t seed);

/// Histogram of natural-purifier outcomes drawn by inverse CDF over the
/// closed-form weight table. Generator: std::mt19937_64 seeded with `seed`,
/// uniform doubles via (x >> 11) * 2^-53; one draw per sample, in order.
/// N <= 2000; count >= 1.
struct InstrumentHistogram {
  std::vector<TwiceSpin> support;
  std::vector<std::int64_t> counts;
  std::vector<double> frequencies;
  std::vector<double> weights;
  std::int64_t total = 0;
};

InstrumentHistogram sample_instrument(int n_qubits, const Noise& noise,
                                      std::uint64_t seed, std::int64_t count);

}  // namespace purify::oracle
