#pragma once

#include <span>
#include <vector>

#include "purify/states.hpp"

// Closed-form large-N behaviour: the 1/N coefficients of the one-qubit
// fidelities, the rate-fidelity curve Phi(mu), its lower bounds, the
// binomial tail-sum limit, and finite-N convergence diagnostics.

namespace purify {

enum class CoeffKind { zero, one, infinity };

/// Leading 1/N coefficient of 1 - F_one^max(N, M):
///   c_0 = (1-lambda)/lambda, c_1 = (1-lambda)/lambda^2,
///   c_inf = (1+lambda)/lambda^2.
double c_coefficient(CoeffKind kind, double lambda);

/// Limiting full-output fidelity at output rate mu = M/N:
///   Phi(mu) = 2 lambda^2 / (2 lambda^2 + mu (1-lambda))   for mu <= lambda,
///             2 lambda^2 / (mu (1+lambda))                 for mu >= lambda.
/// mu must be > 0; the mu -> 0 limit is 1 but is not a function value.
double phi_rate(double mu, double lambda);

/// Crude bound Phi(mu) >= 1 - mu c_inf / 2; may be negative (vacuous).
double phi_lower_crude(double mu, double lambda);

/// Refined bound: 1 - mu(1-lambda)/(2 lambda^2) for mu <= lambda,
/// 2 - mu(1+lambda)/(2 lambda^2) for mu >= lambda; continuous at mu = lambda.
double phi_lower_refined(double mu, double lambda);

/// Phi(K,M,z) = C(K,M)^{-1} sum_{R=M}^{K} C(R,M) z^{K-R} for 0 <= M <= K,
/// |z| < 1. Phi(K,K,z) == 1 exactly.
double binom_phi(std::int64_t big_k, std::int64_t m, double z);

/// Limit of Phi(K,M,z) as M/K -> c: 1 / (1 - (1-c) z). Accepted for
/// c in (0,1], the regime the rate curve uses.
double binom_phi_limit(double c, double z);

enum class ConvergenceKind { c_zero, c_one, c_infinity, phi };

/// One row of a convergence diagnostic: the finite-N quantity, the
/// predicted limit, and |finite - limit|.
struct ConvergenceRow {
  int n = 0;
  double finite_value = 0.0;
  double limit_value = 0.0;
  double residual = 0.0;
};

/// For the c_* kinds the finite-N quantity is N (1 - F_one^max(N, .)),
/// evaluated through the cancellation-free deficit forms, against c/2.
/// For phi it is F_all^max(N, round(mu N)) against phi_rate(mu).
/// Grid guards: N <= 5000 for the one-qubit kinds, N <= 1000 for phi.
std::vector<ConvergenceRow> convergence_report(const Noise& noise,
                                               ConvergenceKind kind,
                                               std::span<const int> ns,
                                               double mu = 0.0);

}  // namespace purify
