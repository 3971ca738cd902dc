#pragma once

#include <span>
#include <vector>

#include "purify/states.hpp"

// Data behind the four standard plots, produced deterministically so the
// CLI can serialize them bit-exactly.

namespace purify {

/// One-qubit figures of merit versus input count: no demand on outputs,
/// one output, and the infinite-output limit.
struct Fig1Row {
  int n = 0;
  double f_zero = 0.0;
  double f_one = 0.0;
  double f_inf = 0.0;
};

std::vector<Fig1Row> figure_one_rows(const Noise& noise, int n_max);

/// Rate curve Phi(mu) for a sweep of lambda values. lambda == 1 is computed
/// from the analytic limit of the branch formulas (Phi = 1 for mu <= 1,
/// 1/mu beyond); other lambdas must lie in (0,1). natural_phi is the
/// operating point of the natural purifier, 2mu/(1+mu), defined for
/// mu <= 1. branch_lambda is set (else 0) when mu coincides with a swept
/// lambda, flagging the dotted-line points.
struct Fig2Row {
  double mu = 0.0;
  std::vector<double> phi;
  double natural_phi = 0.0;
  bool has_natural = false;
  double branch_lambda = 0.0;
};

struct Fig2Data {
  std::vector<double> lambdas;
  std::vector<Fig2Row> rows;
};

Fig2Data figure_two_data(std::span<const double> lambdas, double mu_max,
                         int points);
std::vector<double> figure_two_default_lambdas();

/// Block-weight densities rescaled to unit area: density = w_N(s) * N/2 at
/// abscissa x = 2s/N, one row per (N, block).
struct Fig3Row {
  int n = 0;
  double x = 0.0;
  double density = 0.0;
};

std::vector<Fig3Row> figure_three_rows(const Noise& noise, std::span<const int> ns);

/// The exact rate curve with its two lower bounds on a mu grid over (0, mu_max].
struct Fig4Row {
  double mu = 0.0;
  double crude = 0.0;
  double refined = 0.0;
  double exact = 0.0;
};

std::vector<Fig4Row> figure_four_rows(double lambda, double mu_max, int points);

}  // namespace purify
