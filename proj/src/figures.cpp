#include "purify/figures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "purify/asymptotics.hpp"
#include "purify/purifiers.hpp"

namespace purify {

std::vector<Fig1Row> figure_one_rows(const Noise& noise, int n_max) {
  if (n_max < 1) throw std::domain_error("figure_one_rows: n_max must be >= 1");
  std::vector<Fig1Row> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back(Fig1Row{n, fidelity_one_max_zero(n, noise),
                           fidelity_one_max(n, 1, noise).value,
                           fidelity_one_max_inf(n, noise).value});
  }
  return rows;
}

std::vector<double> figure_two_default_lambdas() {
  std::vector<double> lambdas;
  for (int i = 1; i <= 10; ++i) lambdas.push_back(i / 10.0);
  return lambdas;
}

namespace {

double phi_rate_with_unit_limit(double mu, double lambda) {
  if (lambda == 1.0) {
    // Analytic lambda -> 1 limit of the branch formulas.
    return mu <= 1.0 ? 1.0 : 1.0 / mu;
  }
  return phi_rate(mu, lambda);
}

}  // namespace

Fig2Data figure_two_data(std::span<const double> lambdas, double mu_max,
                         int points) {
  if (points < 1) throw std::domain_error("figure_two_data: points must be >= 1");
  if (!(mu_max > 0.0)) throw std::domain_error("figure_two_data: mu_max must be > 0");
  for (double lambda : lambdas) {
    if (!(lambda > 0.0) || lambda > 1.0) {
      throw std::domain_error("figure_two_data: lambda values must lie in (0,1]");
    }
  }
  Fig2Data data;
  data.lambdas.assign(lambdas.begin(), lambdas.end());

  // Regular grid plus the swept lambdas themselves, so each curve's branch
  // point is an emitted row.
  std::vector<double> mus;
  for (int i = 1; i <= points; ++i) {
    mus.push_back(mu_max * static_cast<double>(i) / static_cast<double>(points));
  }
  for (double lambda : lambdas) {
    if (lambda < 1.0 && lambda <= mu_max) mus.push_back(lambda);
  }
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());

  data.rows.reserve(mus.size());
  for (double mu : mus) {
    Fig2Row row;
    row.mu = mu;
    row.phi.reserve(lambdas.size());
    for (double lambda : lambdas) {
      row.phi.push_back(phi_rate_with_unit_limit(mu, lambda));
    }
    if (mu <= 1.0) {
      row.natural_phi = 2.0 * mu / (1.0 + mu);
      row.has_natural = true;
    }
    for (double lambda : lambdas) {
      if (lambda < 1.0 && mu == lambda) row.branch_lambda = lambda;
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::vector<Fig3Row> figure_three_rows(const Noise& noise, std::span<const int> ns) {
  std::vector<Fig3Row> rows;
  for (int n : ns) {
    const WeightTable table = weight_table(n, noise);
    for (std::size_t i = 0; i < table.support().size(); ++i) {
      // Abscissa spacing is 2/N, so w * N/2 integrates to 1.
      rows.push_back(Fig3Row{
          n,
          static_cast<double>(table.support()[i].two_s) / static_cast<double>(n),
          table.weights()[i] * static_cast<double>(n) / 2.0});
    }
  }
  return rows;
}

std::vector<Fig4Row> figure_four_rows(double lambda, double mu_max, int points) {
  if (points < 1) throw std::domain_error("figure_four_rows: points must be >= 1");
  if (!(mu_max > 0.0)) throw std::domain_error("figure_four_rows: mu_max must be > 0");
  std::vector<Fig4Row> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) {
    const double mu = mu_max * static_cast<double>(i) / static_cast<double>(points);
    rows.push_back(Fig4Row{mu, phi_lower_crude(mu, lambda),
                           phi_lower_refined(mu, lambda), phi_rate(mu, lambda)});
  }
  return rows;
}

}  // namespace purify
