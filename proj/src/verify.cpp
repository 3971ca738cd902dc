#include "purify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "purify/asymptotics.hpp"
#include "purify/oracle.hpp"
#include "purify/purifiers.hpp"
#include "purify/repspace.hpp"
#include "purify/states.hpp"

namespace purify {

namespace {

std::string format_name(const char* what, double lambda, int n) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s lambda=%.2f N=%d", what, lambda, n);
  return buf;
}

class Battery {
 public:
  explicit Battery(double tolerance) : tolerance_(tolerance) {}

  void record(std::string name, double residual) {
    CheckResult check{std::move(name), residual, tolerance_,
                      residual <= tolerance_};
    report_.all_passed = report_.all_passed && check.pass;
    report_.checks.push_back(std::move(check));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  double tolerance_;
  VerifyReport report_;
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > 8) {
    throw std::domain_error("verify: max-n must be in 1..8");
  }
  if (options.max_m < 1 || options.max_m > 6) {
    throw std::domain_error("verify: max-m must be in 1..6");
  }
  if (!(options.tolerance > 0.0)) {
    throw std::domain_error("verify: tolerance must be > 0");
  }

  Battery battery(options.tolerance);

  for (double lambda : options.lambdas) {
    const Noise noise = Noise::from_lambda(lambda);

    for (int n = 1; n <= options.max_n; ++n) {
      const oracle::SpinOps ops = oracle::total_spin_ops(n);
      const oracle::DenseOperator rho = oracle::dense_product_state(n, noise);
      const WeightTable table = weight_table(n, noise);

      // Dense weights versus the closed form.
      double weight_residual = 0.0;
      double gamma_residual = 0.0;
      for (TwiceSpin s : table.support()) {
        const oracle::DenseOperator projector =
            oracle::casimir_projector(n, s, ops.l_squared);
        const oracle::DenseOperator p_rho = oracle::multiply(projector, rho);
        const double w = p_rho.trace().real();
        weight_residual = std::max(weight_residual,
                                   std::abs(w - table.weight(s)));
        // tr(P_s rho L3) = w * s * gamma(rho_s): the multiplicity part of
        // the block is maximally mixed and carries no polarization.
        const double l3_moment =
            oracle::multiply(p_rho, ops.l3).trace().real();
        const double expected =
            w * (s.two_s / 2.0) * gamma_block(s, noise);
        gamma_residual = std::max(gamma_residual,
                                  std::abs(l3_moment - expected));
      }
      battery.record(format_name("weights/dense", lambda, n), weight_residual);
      battery.record(format_name("gamma/dense", lambda, n), gamma_residual);

      // Closed-form fidelities versus the dense channel evaluation.
      double one_residual = 0.0;
      double all_residual = 0.0;
      for (int m = 1; m <= options.max_m; ++m) {
        const oracle::OracleFidelities dense = oracle::oracle_fidelities(n, m, noise);
        one_residual = std::max(one_residual,
                                std::abs(dense.f_one -
                                         fidelity_one_max(n, m, noise).value));
        all_residual = std::max(all_residual,
                                std::abs(dense.f_all -
                                         fidelity_all_max(n, m, noise).value));
      }
      battery.record(format_name("fidelity-one/dense", lambda, n), one_residual);
      battery.record(format_name("fidelity-all/dense", lambda, n), all_residual);
    }
  }

  {
    // Weight normalization across the full supported range.
    double residual = 0.0;
    for (double lambda : options.lambdas) {
      const Noise noise = Noise::from_lambda(lambda);
      for (int n = 1; n <= 100; ++n) {
        residual = std::max(residual,
                            std::abs(kernels::sum(weight_table(n, noise).weights()) - 1.0));
      }
      for (int n : {1000, 2000}) {
        residual = std::max(residual,
                            std::abs(kernels::sum(weight_table(n, noise).weights()) - 1.0));
      }
    }
    battery.record("weights/normalization N<=2000", residual);
  }

  {
    // Block structure of the dense decomposition at lambda = 0.5.
    const Noise noise = Noise::from_lambda(0.5);
    const int n = 6;
    const oracle::SpinOps ops = oracle::total_spin_ops(n);
    const oracle::DenseOperator rho = oracle::dense_product_state(n, noise);
    oracle::DenseOperator sum_p(n);
    double off_block = 0.0;
    double idempotency = 0.0;
    const auto support = spin_support(n);
    std::vector<oracle::DenseOperator> projectors;
    for (TwiceSpin s : support) {
      projectors.push_back(oracle::casimir_projector(n, s, ops.l_squared));
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t d = 0; d < sum_p.dim() * sum_p.dim(); ++d) {
        sum_p.data()[d] += projectors[i].data()[d];
      }
      idempotency = std::max(
          idempotency,
          oracle::multiply(projectors[i], projectors[i]).max_abs_diff(projectors[i]));
      for (std::size_t j = 0; j < support.size(); ++j) {
        if (i == j) continue;
        const oracle::DenseOperator cross =
            oracle::multiply(oracle::multiply(projectors[i], rho), projectors[j]);
        double worst = 0.0;
        for (std::size_t d = 0; d < cross.dim() * cross.dim(); ++d) {
          worst = std::max(worst, std::abs(cross.data()[d]));
        }
        off_block = std::max(off_block, worst);
      }
    }
    battery.record("projectors/idempotent N=6", idempotency);
    battery.record("projectors/completeness N=6",
                   sum_p.max_abs_diff(oracle::DenseOperator::identity(n)));
    battery.record("projectors/off-block N=6", off_block);
  }

  {
    // Channel axioms on every branch: outputs stay positive and normalized.
    const Noise noise = Noise::from_lambda(0.5);
    double psd = 0.0;
    double trace_defect = 0.0;
    for (int two_s : {0, 1, 2, 3, 4}) {
      const TwiceSpin s{two_s};
      const oracle::DenseOperator theta = oracle::embed_block_state(s, noise);
      for (int m = 1; m <= options.max_m; ++m) {
        const oracle::DenseOperator out =
            two_s < m ? oracle::cloner_predual_apply(s, m, theta)
                      : oracle::reduce_predual_apply(s, m, theta);
        psd = std::max(psd, std::max(0.0, -out.min_eigenvalue()));
        trace_defect = std::max(trace_defect, std::abs(out.trace().real() - 1.0));
        trace_defect = std::max(trace_defect, std::abs(out.trace().imag()));
      }
    }
    battery.record("channels/positive", psd);
    battery.record("channels/trace-preserving", trace_defect);
  }

  {
    // Covariance: a rotated input with a rotated target reproduces the
    // fidelities exactly; the closed forms assume this symmetry.
    const Noise noise = Noise::from_lambda(0.5);
    double residual = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const oracle::SingleQubitMatrix u = oracle::random_su2(seed);
      for (const auto& [n, m] : {std::pair{4, 2}, std::pair{4, 5}}) {
        const oracle::OracleFidelities plain = oracle::oracle_fidelities(n, m, noise);
        const oracle::OracleFidelities rotated =
            oracle::oracle_fidelities_rotated(n, m, noise, u);
        residual = std::max(residual, std::abs(plain.f_one - rotated.f_one));
        residual = std::max(residual, std::abs(plain.f_all - rotated.f_all));
      }
    }
    battery.record("covariance/haar-rotations", residual);
  }

  {
    // Criterion coincidence at M = 1 and monotonicity in M.
    double coincidence = 0.0;
    double monotonicity = 0.0;
    for (double lambda : options.lambdas) {
      const Noise noise = Noise::from_lambda(lambda);
      for (int n = 1; n <= 12; ++n) {
        coincidence = std::max(coincidence,
                               std::abs(fidelity_one_max(n, 1, noise).value -
                                        fidelity_all_max(n, 1, noise).value));
        double prev_one = 2.0;
        double prev_all = 2.0;
        for (int m = 1; m <= 12; ++m) {
          const double one = fidelity_one_max(n, m, noise).value;
          const double all = fidelity_all_max(n, m, noise).value;
          monotonicity = std::max(monotonicity, one - prev_one);
          monotonicity = std::max(monotonicity, all - prev_all);
          prev_one = one;
          prev_all = all;
        }
      }
    }
    battery.record("fidelity/m1-coincidence", coincidence);
    battery.record("fidelity/monotone-in-M", std::max(monotonicity, 0.0));
  }

  {
    // Branch agreement of f_one and f_all across 2s = M.
    const Noise noise = Noise::from_lambda(0.5);
    double residual = 0.0;
    for (int m = 1; m <= 40; ++m) {
      const TwiceSpin s{m};
      const double t = static_cast<double>(m);
      const double gamma = gamma_block(s, noise);
      const double via_gamma = 0.5 * (1.0 + gamma);  // 2s >= M branch at 2s = M
      residual = std::max(residual, std::abs(f_one(m, noise, s) - via_gamma));
      const double z = noise.z();
      const double cloning_at_boundary =
          (t + 1.0) / (t + 1.0) * (1.0 - z) / (1.0 - std::pow(z, m + 1));
      residual = std::max(residual,
                          std::abs(f_all(m, noise, s) - cloning_at_boundary));
    }
    battery.record("fidelity/branch-continuity", residual);
  }

  {
    // Sandwich between the two figures of merit.
    double slack = 0.0;
    for (double lambda : options.lambdas) {
      const Noise noise = Noise::from_lambda(lambda);
      for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= 8; ++m) {
          const double one = fidelity_one_max(n, m, noise).value;
          const double all = fidelity_all_max(n, m, noise).value;
          slack = std::max(slack, (1.0 - one) - (1.0 - all));
          slack = std::max(slack, (1.0 - all) - m * (1.0 - one));
        }
      }
    }
    battery.record("fidelity/sandwich", std::max(slack, 0.0));
  }

  {
    // Rate-curve identities and bounds.
    double residual = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double lambda = i / 21.0;
      const double lhs = 2.0 * lambda * lambda /
                         (2.0 * lambda * lambda + lambda * (1.0 - lambda));
      const double rhs = 2.0 * lambda * lambda / (lambda * (1.0 + lambda));
      residual = std::max(residual, std::abs(lhs - rhs));
      residual = std::max(residual,
                          std::abs(phi_rate(lambda, lambda) -
                                   (1.0 - Noise::from_lambda(lambda).z())));
    }
    battery.record("phi/branch-continuity", residual);

    double bound_slack = 0.0;
    for (double lambda : options.lambdas) {
      for (int i = 1; i <= 200; ++i) {
        const double mu = 3.0 * i / 200.0;
        const double crude = phi_lower_crude(mu, lambda);
        const double refined = phi_lower_refined(mu, lambda);
        const double exact = phi_rate(mu, lambda);
        if (crude >= 0.0) bound_slack = std::max(bound_slack, crude - refined);
        if (refined >= 0.0) bound_slack = std::max(bound_slack, refined - exact);
      }
    }
    battery.record("phi/lower-bounds", std::max(bound_slack, 0.0));
  }

  {
    // The binomial tail sum: exact value at M = K, and the limit consistency
    // (1-z) Phi_limit(mu/lambda, z) = Phi(mu) for mu <= lambda.
    double residual = 0.0;
    for (int k = 1; k <= 50; ++k) {
      residual = std::max(residual, std::abs(binom_phi(k, k, 0.37) - 1.0));
    }
    for (double lambda : options.lambdas) {
      const double z = Noise::from_lambda(lambda).z();
      for (int i = 1; i <= 10; ++i) {
        const double mu = lambda * i / 10.0;
        const double via_limit = (1.0 - z) * binom_phi_limit(mu / lambda, z);
        residual = std::max(residual, std::abs(via_limit - phi_rate(mu, lambda)));
      }
    }
    battery.record("binom-phi/identities", residual);
  }

  {
    // Natural instrument bookkeeping.
    double residual = 0.0;
    for (double lambda : options.lambdas) {
      const Noise noise = Noise::from_lambda(lambda);
      for (int n = 1; n <= 20; ++n) {
        const auto outcomes = natural_instrument(n, noise);
        double prob_sum = 0.0;
        double mean_f_one = 0.0;
        for (const auto& out : outcomes) {
          prob_sum += out.probability;
          mean_f_one += out.probability * out.f_one;
        }
        residual = std::max(residual, std::abs(prob_sum - 1.0));
        residual = std::max(residual,
                            std::abs(mean_f_one -
                                     fidelity_one_max(n, 1, noise).value));
      }
    }
    battery.record("instrument/bookkeeping", residual);
  }

  {
    // Sampler determinism plus multinomial agreement at 4 sigma.
    const Noise noise = Noise::from_lambda(0.5);
    const auto first = oracle::sample_instrument(2, noise, 42, 10000);
    const auto second = oracle::sample_instrument(2, noise, 42, 10000);
    double determinism = 0.0;
    for (std::size_t i = 0; i < first.counts.size(); ++i) {
      determinism = std::max(
          determinism,
          std::abs(static_cast<double>(first.counts[i] - second.counts[i])));
    }
    battery.record("sampler/deterministic", determinism);

    double band_excess = 0.0;
    for (int n : {2, 7}) {
      const auto hist = oracle::sample_instrument(n, noise, 42, 10000);
      for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        const double w = hist.weights[i];
        const double sigma =
            std::sqrt(w * (1.0 - w) / static_cast<double>(hist.total));
        band_excess = std::max(band_excess,
                               std::abs(hist.frequencies[i] - w) - 4.0 * sigma);
      }
    }
    battery.record("sampler/4-sigma-bands", std::max(band_excess, 0.0));
  }

  return battery.take();
}

}  // namespace purify
