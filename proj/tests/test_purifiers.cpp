#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "purify/purifiers.hpp"
#include "purify/repspace.hpp"

using purify::Criterion;
using purify::Noise;
using purify::TwiceSpin;

namespace {
const Noise kHalf = Noise::from_lambda(0.5);
}

TEST_CASE("cloner gain branches") {
  CHECK(purify::cloner_gain(4, TwiceSpin{2}) == doctest::Approx(1.5));
  CHECK(purify::cloner_gain(2, TwiceSpin{4}) == doctest::Approx(0.5));
  CHECK(purify::cloner_gain(3, TwiceSpin{3}) == doctest::Approx(1.0));
  CHECK(purify::cloner_gain(5, TwiceSpin{0}) == doctest::Approx(3.5));
  // Branch agreement at 2s = M for a range of M.
  for (int m = 1; m <= 40; ++m) {
    const double grow = static_cast<double>(m + 2) / (m + 2);
    const double shrink = static_cast<double>(m) / m;
    CHECK(grow == shrink);
    CHECK(purify::cloner_gain(m, TwiceSpin{m}) == 1.0);
  }
}

TEST_CASE("f_one spot values") {
  CHECK(purify::f_one(1, kHalf, TwiceSpin{1}) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(purify::f_one(1, kHalf, TwiceSpin{2}) ==
        doctest::Approx(21.0 / 26.0).epsilon(1e-14));
  CHECK(purify::f_one(1, kHalf, TwiceSpin{0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(purify::f_one(7, kHalf, TwiceSpin{0}) == doctest::Approx(0.5).epsilon(1e-14));
  // Equivalent form through the gain: f = (1 + omega (2s/M) gamma) / 2.
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int m = 1; m <= 10; ++m) {
      for (int two_s = 0; two_s <= 12; ++two_s) {
        const TwiceSpin s{two_s};
        const double via_gain =
            0.5 * (1.0 + purify::cloner_gain(m, s) * two_s / m *
                             purify::gamma_block(s, noise));
        CHECK(purify::f_one(m, noise, s) ==
              doctest::Approx(via_gain).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("f_one branch continuity at 2s = M") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int m = 1; m <= 40; ++m) {
      // The 2s > M form at the boundary is (1 + gamma)/2.
      const double via_gamma =
          0.5 * (1.0 + purify::gamma_block(TwiceSpin{m}, noise));
      CHECK(std::abs(purify::f_one(m, noise, TwiceSpin{m}) - via_gamma) <= 1e-12);
    }
  }
}

TEST_CASE("f_all spot values") {
  CHECK(purify::f_all(1, kHalf, TwiceSpin{2}) ==
        doctest::Approx(21.0 / 26.0).epsilon(1e-14));
  CHECK(purify::f_all(2, kHalf, TwiceSpin{2}) ==
        doctest::Approx(9.0 / 13.0).epsilon(1e-14));
  CHECK(purify::f_all(2, kHalf, TwiceSpin{1}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(purify::f_all(3, kHalf, TwiceSpin{0}) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("f_all branch continuity at 2s = M") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    const double z = noise.z();
    for (int m = 1; m <= 40; ++m) {
      // Both branches reduce to the top occupation weight at the boundary.
      const double top = (1.0 - z) / (1.0 - std::pow(z, m + 1));
      CHECK(std::abs(purify::f_all(m, noise, TwiceSpin{m}) - top) <= 1e-12);
    }
  }
}

TEST_CASE("one-qubit fidelity spot values") {
  CHECK(purify::fidelity_one_max(1, 1, kHalf).value ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(purify::fidelity_one_max(2, 1, kHalf).value ==
        doctest::Approx(0.75).epsilon(1e-13));
  CHECK(purify::fidelity_one_max(3, 1, kHalf).value ==
        doctest::Approx(0.8125).epsilon(1e-13));
}

TEST_CASE("infinite-rate limit") {
  CHECK(purify::fidelity_one_max_inf(1, kHalf).value ==
        doctest::Approx(7.0 / 12.0).epsilon(1e-14));
  // Lies below every finite-M value.
  for (int n = 1; n <= 10; ++n) {
    const double inf_value = purify::fidelity_one_max_inf(n, kHalf).value;
    for (int m = 1; m <= 12; ++m) {
      CHECK(inf_value <= purify::fidelity_one_max(n, m, kHalf).value + 1e-14);
    }
  }
  // Approaches 1 at large N.
  double prev = 0.0;
  for (int n : {10, 100, 1000}) {
    const double v = purify::fidelity_one_max_inf(n, kHalf).value;
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("zero-demand fidelity and curve ordering") {
  CHECK(purify::fidelity_one_max_zero(1, kHalf) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(purify::fidelity_one_max_zero(3, kHalf) ==
        doctest::Approx(0.85).epsilon(1e-14));
  for (int n = 1; n <= 200; ++n) {
    const double zero = purify::fidelity_one_max_zero(n, kHalf);
    const double one = purify::fidelity_one_max(n, 1, kHalf).value;
    const double inf = purify::fidelity_one_max_inf(n, kHalf).value;
    CHECK(zero >= one - 1e-14);
    CHECK(one >= inf - 1e-14);
  }
}

TEST_CASE("all-qubit fidelity spot values") {
  CHECK(purify::fidelity_all_max(2, 1, kHalf).value ==
        doctest::Approx(0.75).epsilon(1e-13));
  CHECK(purify::fidelity_all_max(2, 2, kHalf).value ==
        doctest::Approx(0.625).epsilon(1e-13));
}

TEST_CASE("the two criteria coincide at M = 1") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 20; ++n) {
      CHECK(std::abs(purify::fidelity_one_max(n, 1, noise).value -
                     purify::fidelity_all_max(n, 1, noise).value) <= 1e-12);
    }
  }
}

TEST_CASE("fidelities are non-increasing in M") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 12; ++n) {
      double prev_one = 2.0, prev_all = 2.0;
      for (int m = 1; m <= 12; ++m) {
        const double one = purify::fidelity_one_max(n, m, noise).value;
        const double all = purify::fidelity_all_max(n, m, noise).value;
        CHECK(one <= prev_one + 1e-14);
        CHECK(all <= prev_all + 1e-14);
        prev_one = one;
        prev_all = all;
      }
    }
  }
}

TEST_CASE("sandwich between the criteria on the optimal device") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 12; ++n) {
      for (int m = 1; m <= 8; ++m) {
        const double one = purify::fidelity_one_max(n, m, noise).value;
        const double all = purify::fidelity_all_max(n, m, noise).value;
        CHECK((1.0 - one) <= (1.0 - all) + 1e-12);
        CHECK((1.0 - all) <= m * (1.0 - one) + 1e-12);
      }
    }
  }
}

TEST_CASE("the device purifies: output polarization at least lambda") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    const double input = (1.0 + lambda) / 2.0;
    for (int n = 1; n <= 30; ++n) {
      const double value = purify::fidelity_one_max(n, 1, noise).value;
      CHECK(value >= input - 1e-12);
      if (n >= 3) CHECK(value > input);
    }
  }
}

TEST_CASE("fidelity reports resum exactly and stay in range") {
  for (int n : {1, 2, 5, 9}) {
    for (int m : {1, 2, 4}) {
      for (Criterion criterion : {Criterion::one, Criterion::all}) {
        const purify::FidelityReport report =
            criterion == Criterion::one ? purify::fidelity_one_max(n, m, kHalf)
                                        : purify::fidelity_all_max(n, m, kHalf);
        double acc = 0.0;
        for (const auto& block : report.per_block) {
          acc += block.weight * block.fidelity;
        }
        CHECK(std::abs(acc - report.value) <= 1e-12);
        CHECK(report.value <= 1.0);
        if (criterion == Criterion::one) {
          CHECK(report.value >= 0.5);
        } else {
          CHECK(report.value > 0.0);
        }
      }
    }
  }
}

TEST_CASE("natural instrument outcomes") {
  const auto outcomes = purify::natural_instrument(2, kHalf);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].two_s == 0);
  CHECK(outcomes[0].probability == doctest::Approx(0.1875).epsilon(1e-13));
  CHECK(outcomes[0].output_count == 0);
  CHECK(outcomes[0].f_one == doctest::Approx(0.5));
  CHECK(outcomes[0].f_all == 1.0);
  CHECK(outcomes[0].empty_output);
  CHECK(outcomes[1].two_s == 2);
  CHECK(outcomes[1].probability == doctest::Approx(0.8125).epsilon(1e-13));
  CHECK(outcomes[1].output_count == 2);
  CHECK(outcomes[1].f_one == doctest::Approx(21.0 / 26.0).epsilon(1e-13));
  CHECK(outcomes[1].f_all == doctest::Approx(9.0 / 13.0).epsilon(1e-13));
  CHECK_FALSE(outcomes[1].empty_output);

  const auto single = purify::natural_instrument(1, kHalf);
  REQUIRE(single.size() == 1);
  CHECK(single[0].two_s == 1);
  CHECK(single[0].probability == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(single[0].f_one == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(single[0].f_all == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("mean instrument fidelity equals the M = 1 optimum") {
  for (double lambda : {0.3, 0.5, 0.9}) {
    const Noise noise = Noise::from_lambda(lambda);
    for (int n = 1; n <= 40; ++n) {
      const auto outcomes = purify::natural_instrument(n, noise);
      double prob_sum = 0.0;
      double mean = 0.0;
      for (const auto& out : outcomes) {
        prob_sum += out.probability;
        mean += out.probability * out.f_one;
        CHECK(out.output_count == out.two_s);
      }
      CHECK(std::abs(prob_sum - 1.0) <= 1e-12);
      CHECK(std::abs(mean - purify::fidelity_one_max(n, 1, noise).value) <= 1e-12);
    }
  }
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(purify::fidelity_one_max(0, 1, kHalf), std::domain_error);
  CHECK_THROWS_AS(purify::fidelity_one_max(1, 0, kHalf), std::domain_error);
  CHECK_THROWS_AS(purify::f_one(0, kHalf, TwiceSpin{1}), std::domain_error);
  CHECK_THROWS_AS(purify::fidelity_all_max(2, -1, kHalf), std::domain_error);
}
