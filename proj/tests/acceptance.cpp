// Acceptance suite: every release criterion, each printed as one PASS/FAIL
// line with its worst residual. Exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "purify/asymptotics.hpp"
#include "purify/figures.hpp"
#include "purify/oracle.hpp"
#include "purify/purifiers.hpp"
#include "purify/states.hpp"

using purify::ConvergenceKind;
using purify::Noise;
using purify::TwiceSpin;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, double residual,
            double bound) {
  std::printf("%s  criterion %2d: %s (worst %.3e, bound %.3e)\n",
              pass ? "PASS" : "FAIL", criterion, what.c_str(), residual, bound);
  if (!pass) ++g_failures;
}

const std::array<double, 3> kLambdas = {0.3, 0.5, 0.9};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void criterion_1_oracle_grid() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double lambda : kLambdas) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 8; ++n) {
      for (int m = 1; m <= 6; ++m) {
        const auto dense = purify::oracle::oracle_fidelities(n, m, noise);
        worst = std::max(worst,
                         std::abs(dense.f_one -
                                  purify::fidelity_one_max(n, m, noise).value));
        worst = std::max(worst,
                         std::abs(dense.f_all -
                                  purify::fidelity_all_max(n, m, noise).value));
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(1, "oracle equivalence N<=8 M<=6", worst <= 1e-10 && elapsed <= 60.0,
         worst, 1e-10);
  std::printf("      (grid runtime %.1f s, budget 60 s)\n", elapsed);
}

void criterion_2_weights() {
  double worst_sum = 0.0;
  for (double lambda : kLambdas) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 100; ++n) {
      worst_sum = std::max(
          worst_sum,
          std::abs(purify::kernels::sum(purify::weight_table(n, noise).weights()) -
                   1.0));
    }
    for (int n : {1000, 2000}) {
      worst_sum = std::max(
          worst_sum,
          std::abs(purify::kernels::sum(purify::weight_table(n, noise).weights()) -
                   1.0));
    }
  }
  double worst_oracle = 0.0;
  for (double lambda : kLambdas) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 8; ++n) {
      for (TwiceSpin s : purify::spin_support(n)) {
        worst_oracle = std::max(
            worst_oracle, std::abs(purify::oracle::oracle_weight(n, s, noise) -
                                   purify::weight_log(n, s, noise).value()));
      }
    }
  }
  report(2, "weight normalization N<=2000", worst_sum <= 1e-12, worst_sum, 1e-12);
  report(2, "dense weights N<=8", worst_oracle <= 1e-10, worst_oracle, 1e-10);
}

void criterion_3_spot_values() {
  const Noise half = Noise::from_lambda(0.5);
  double worst = 0.0;
  for (double lambda : kLambdas) {
    const Noise noise = Noise::from_lambda(lambda);
    worst = std::max(worst, std::abs(purify::fidelity_one_max(1, 1, noise).value -
                                     (1.0 + lambda) / 2.0));
  }
  worst = std::max(worst,
                   std::abs(purify::fidelity_one_max(3, 1, half).value - 0.8125));
  worst = std::max(worst,
                   std::abs(purify::fidelity_all_max(2, 2, half).value - 0.625));
  worst = std::max(worst, std::abs(purify::fidelity_one_max_inf(1, half).value -
                                   7.0 / 12.0));
  worst = std::max(worst, std::abs(purify::gamma_block(TwiceSpin{2}, half) -
                                   8.0 / 13.0));
  report(3, "exact spot values", worst <= 1e-12, worst, 1e-12);
}

void criterion_4_figure_one() {
  const Noise half = Noise::from_lambda(0.5);
  const auto rows = purify::figure_one_rows(half, 100);
  double endpoint = std::abs(rows[0].f_zero - 0.75);
  endpoint = std::max(endpoint, std::abs(rows[0].f_one - 0.75));
  endpoint = std::max(endpoint, std::abs(rows[0].f_inf - 7.0 / 12.0));

  bool ordered = true;
  bool increasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ordered = ordered && rows[i].f_zero >= rows[i].f_one &&
              rows[i].f_one >= rows[i].f_inf;
    if (rows[i].n >= 4) {
      increasing = increasing && rows[i].f_zero > rows[i - 1].f_zero &&
                   rows[i].f_one > rows[i - 1].f_one &&
                   rows[i].f_inf > rows[i - 1].f_inf;
    }
  }
  report(4, "figure-1 left endpoints", endpoint <= 1e-12, endpoint, 1e-12);
  report(4, "figure-1 ordering f0 >= f1 >= finf", ordered, ordered ? 0.0 : 1.0, 0.0);
  report(4, "figure-1 strictly increasing from N = 3", increasing,
         increasing ? 0.0 : 1.0, 0.0);
}

void criterion_5_coefficients() {
  const auto start = std::chrono::steady_clock::now();
  const Noise half = Noise::from_lambda(0.5);
  const std::array<int, 3> ns = {100, 300, 1000};
  const struct {
    ConvergenceKind kind;
    double bound;
    const char* name;
  } cases[] = {
      {ConvergenceKind::c_zero, 0.02, "c0: |N(1-F(N,0)) - 0.5|"},
      {ConvergenceKind::c_one, 0.04, "c1: |N(1-F(N,1)) - 1|"},
      {ConvergenceKind::c_infinity, 0.1, "cinf: |N(1-F(N,inf)) - 3|"},
  };
  for (const auto& c : cases) {
    const auto rows = purify::convergence_report(half, c.kind, ns);
    bool shrinking = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      shrinking = shrinking && rows[i].residual <= rows[i - 1].residual;
    }
    const double final_residual = rows.back().residual;
    report(5, std::string(c.name) + " at N=1000, shrinking over {100,300,1000}",
           final_residual <= c.bound && shrinking, final_residual, c.bound);
  }
  const double elapsed = seconds_since(start);
  if (elapsed > 10.0) {
    report(5, "runtime <= 10 s", false, elapsed, 10.0);
  } else {
    std::printf("      (coefficient runtime %.2f s, budget 10 s)\n", elapsed);
  }
}

void criterion_6_rate_curve() {
  const Noise half = Noise::from_lambda(0.5);
  double worst = 0.0;
  for (double mu : {0.25, 0.5, 1.0}) {
    const int m = static_cast<int>(std::lround(400 * mu));
    const double finite = purify::fidelity_all_max(400, m, half).value;
    worst = std::max(worst, std::abs(finite - purify::phi_rate(mu, 0.5)));
  }
  report(6, "F_all(400, 400mu) vs Phi(mu)", worst <= 0.02, worst, 0.02);

  double continuity = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double lambda = static_cast<double>(i) / 21.0;
    const double left = 2.0 * lambda * lambda /
                        (2.0 * lambda * lambda + lambda * (1.0 - lambda));
    const double right = 2.0 * lambda * lambda / (lambda * (1.0 + lambda));
    continuity = std::max(continuity, std::abs(left - right));
  }
  report(6, "Phi branch continuity at mu = lambda", continuity <= 1e-14,
         continuity, 1e-14);
}

void criterion_7_sandwich() {
  double slack = 0.0;
  for (double lambda : kLambdas) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 12; ++n) {
      for (int m = 1; m <= 8; ++m) {
        const double one = purify::fidelity_one_max(n, m, noise).value;
        const double all = purify::fidelity_all_max(n, m, noise).value;
        slack = std::max(slack, (1.0 - one) - (1.0 - all));
        slack = std::max(slack, (1.0 - all) - m * (1.0 - one));
      }
    }
  }
  report(7, "sandwich 1-F_one <= 1-F_all <= M(1-F_one)", slack <= 1e-12, slack,
         1e-12);
}

void criterion_8_bounds() {
  double slack = 0.0;
  for (double lambda : kLambdas) {
    for (int i = 1; i <= 200; ++i) {
      const double mu = 3.0 * i / 200.0;
      const double crude = purify::phi_lower_crude(mu, lambda);
      const double refined = purify::phi_lower_refined(mu, lambda);
      const double exact = purify::phi_rate(mu, lambda);
      if (crude >= 0.0) slack = std::max(slack, crude - refined);
      if (refined >= 0.0) slack = std::max(slack, refined - exact);
    }
  }
  report(8, "phi_lower_crude <= phi_lower_refined <= phi_rate", slack <= 1e-12,
         slack, 1e-12);
}

void criterion_9_binom() {
  double prev = 1e300;
  bool shrinking = true;
  for (std::int64_t n : {10, 50, 200}) {
    const double err = std::abs(purify::binom_phi(2 * n, n, 1.0 / 3.0) - 1.2);
    shrinking = shrinking && err < prev;
    prev = err;
  }
  report(9, "binom_phi(2n,n,1/3) -> 1.2 monotonically", shrinking,
         shrinking ? prev : 1.0, 1.0);

  double worst = 0.0;
  for (int k = 1; k <= 50; ++k) {
    for (double z : {-0.7, 0.2, 0.9}) {
      worst = std::max(worst, std::abs(purify::binom_phi(k, k, z) - 1.0));
    }
  }
  report(9, "binom_phi(K,K,z) == 1 exactly", worst == 0.0, worst, 0.0);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void criterion_10_sampler() {
  const std::string base = "/tmp/purify_acceptance_" + std::to_string(::getpid());
  const std::string out1 = base + "_a.csv";
  const std::string out2 = base + "_b.csv";
  const std::string cmd = std::string(PURIFY_CLI_PATH) +
                          " sample --n 2 --lambda 0.5 --count 100000 --seed 42";
  const int rc1 = std::system((cmd + " --out " + out1 + " 2>/dev/null").c_str());
  const int rc2 = std::system((cmd + " --out " + out2 + " 2>/dev/null").c_str());
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  const bool ran = WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0 && !a.empty();
  report(10, "sampler reruns byte-identical", ran && a == b, a == b ? 0.0 : 1.0,
         0.0);

  // Frequency of the two_s = 0 outcome from the emitted CSV.
  double freq = -1.0;
  std::istringstream in(a);
  std::string line;
  std::getline(in, line);  // header
  if (std::getline(in, line)) {
    const auto first_comma = line.find(',');
    const auto second_comma = line.find(',', first_comma + 1);
    const auto third_comma = line.find(',', second_comma + 1);
    freq = std::stod(line.substr(second_comma + 1, third_comma - second_comma - 1));
  }
  report(10, "sampler frequency of two_s=0 within 0.005 of 0.1875",
         std::abs(freq - 0.1875) <= 0.005, std::abs(freq - 0.1875), 0.005);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

}  // namespace

int main() {
  criterion_1_oracle_grid();
  criterion_2_weights();
  criterion_3_spot_values();
  criterion_4_figure_one();
  criterion_5_coefficients();
  criterion_6_rate_curve();
  criterion_7_sandwich();
  criterion_8_bounds();
  criterion_9_binom();
  criterion_10_sampler();
  if (g_failures == 0) {
    std::printf("ALL ACCEPTANCE CRITERIA PASSED\n");
  } else {
    std::printf("%d ACCEPTANCE CHECK(S) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
