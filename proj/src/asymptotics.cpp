#include "purify/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "purify/purifiers.hpp"

namespace purify {

namespace {

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("lambda must lie strictly inside (0,1)");
  }
}

}  // namespace

double c_coefficient(CoeffKind kind, double lambda) {
  require_lambda(lambda);
  switch (kind) {
    case CoeffKind::zero:
      return (1.0 - lambda) / lambda;
    case CoeffKind::one:
      return (1.0 - lambda) / (lambda * lambda);
    case CoeffKind::infinity:
      break;
  }
  return (1.0 + lambda) / (lambda * lambda);
}

double phi_rate(double mu, double lambda) {
  require_lambda(lambda);
  if (!(mu > 0.0)) throw std::domain_error("phi_rate: mu must be > 0");
  if (mu <= lambda) {
    return 2.0 * lambda * lambda / (2.0 * lambda * lambda + mu * (1.0 - lambda));
  }
  return 2.0 * lambda * lambda / (mu * (1.0 + lambda));
}

double phi_lower_crude(double mu, double lambda) {
  require_lambda(lambda);
  if (!(mu > 0.0)) throw std::domain_error("phi_lower_crude: mu must be > 0");
  return 1.0 - mu * c_coefficient(CoeffKind::infinity, lambda) / 2.0;
}

double phi_lower_refined(double mu, double lambda) {
  require_lambda(lambda);
  if (!(mu > 0.0)) throw std::domain_error("phi_lower_refined: mu must be > 0");
  if (mu <= lambda) {
    return 1.0 - mu * (1.0 - lambda) / (2.0 * lambda * lambda);
  }
  return 2.0 - mu * (1.0 + lambda) / (2.0 * lambda * lambda);
}

double binom_phi(std::int64_t big_k, std::int64_t m, double z) {
  if (m < 0 || m > big_k) throw std::domain_error("binom_phi: need 0 <= M <= K");
  if (!(std::abs(z) < 1.0)) throw std::domain_error("binom_phi: need |z| < 1");
  // Descending R from K: the coefficient C(R,M)/C(K,M) starts at exactly 1
  // and shrinks by (R+1-M)/(R+1) per step, staying in [0,1].
  double coeff = 1.0;
  double z_pow = 1.0;
  double total = 1.0;
  for (std::int64_t r = big_k - 1; r >= m; --r) {
    coeff *= static_cast<double>(r + 1 - m) / static_cast<double>(r + 1);
    z_pow *= z;
    total += coeff * z_pow;
  }
  return total;
}

double binom_phi_limit(double c, double z) {
  if (!(c > 0.0) || !(c <= 1.0)) {
    throw std::domain_error("binom_phi_limit: need c in (0,1]");
  }
  if (!(std::abs(z) < 1.0)) throw std::domain_error("binom_phi_limit: need |z| < 1");
  return 1.0 / (1.0 - (1.0 - c) * z);
}

std::vector<ConvergenceRow> convergence_report(const Noise& noise,
                                               ConvergenceKind kind,
                                               std::span<const int> ns,
                                               double mu) {
  const int max_n = kind == ConvergenceKind::phi ? 1000 : 5000;
  for (int n : ns) {
    if (n < 1 || n > max_n) {
      throw std::domain_error("convergence_report: N outside the supported grid");
    }
  }
  if (kind == ConvergenceKind::phi && !(mu > 0.0)) {
    throw std::domain_error("convergence_report: phi kind needs mu > 0");
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    ConvergenceRow row;
    row.n = n;
    switch (kind) {
      case ConvergenceKind::c_zero:
        // F(N,0) is f_one(M=1) of the maximal block 2s = N; take its
        // deficit directly instead of 1 - F.
        row.finite_value = n * f_one_deficit(1, noise, TwiceSpin{n});
        row.limit_value = c_coefficient(CoeffKind::zero, noise.lambda) / 2.0;
        break;
      case ConvergenceKind::c_one: {
        const WeightTable table = weight_table(n, noise);
        std::vector<double> deficits(table.support().size());
        for (std::size_t i = 0; i < deficits.size(); ++i) {
          deficits[i] = f_one_deficit(1, noise, table.support()[i]);
        }
        row.finite_value = n * kernels::dot(table.weights(), deficits);
        row.limit_value = c_coefficient(CoeffKind::one, noise.lambda) / 2.0;
        break;
      }
      case ConvergenceKind::c_infinity: {
        const WeightTable table = weight_table(n, noise);
        std::vector<double> deficits(table.support().size());
        for (std::size_t i = 0; i < deficits.size(); ++i) {
          deficits[i] = f_one_inf_deficit(noise, table.support()[i]);
        }
        row.finite_value = n * kernels::dot(table.weights(), deficits);
        row.limit_value = c_coefficient(CoeffKind::infinity, noise.lambda) / 2.0;
        break;
      }
      case ConvergenceKind::phi: {
        const int m = static_cast<int>(std::lround(mu * n));
        if (m < 1) throw std::domain_error("convergence_report: mu*N rounds below 1");
        row.finite_value = fidelity_all_max(n, m, noise).value;
        row.limit_value = phi_rate(mu, noise.lambda);
        break;
      }
    }
    row.residual = std::abs(row.finite_value - row.limit_value);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace purify
