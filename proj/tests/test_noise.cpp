#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "qpr/noise.hpp"
#include "qpr/statekit.hpp"

using namespace qpr;

TEST(Sampling, CountsSumToDraws) {
    Rng rng(3);
    const std::vector<double> w{0.2, 0.0, 0.5, 0.3};
    const auto counts = sample_counts(w, 10000, rng);
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), 10000u);
    EXPECT_EQ(counts[1], 0u);
    EXPECT_NEAR(counts[2] / 10000.0, 0.5, 0.03);
}

TEST(Sampling, RejectsBadWeights) {
    Rng rng(1);
    EXPECT_THROW(sample_counts(std::vector<double>{}, 1, rng), std::invalid_argument);
    EXPECT_THROW(sample_counts(std::vector<double>{0.0, 0.0}, 1, rng), std::invalid_argument);
    EXPECT_THROW(sample_counts(std::vector<double>{1.0, -0.1}, 1, rng), std::invalid_argument);
}

TEST(Sampling, QuantumEventsAreFloorOfBudget) {
    auto basis = enumerate_basis(2, 2);
    const auto truth = MeasuredDistribution::from_probabilities(basis, {0.5, 0.0, 0.5});
    Rng rng(9);
    const auto sampled = sample_quantum_distribution(truth, 1001, 2, rng);
    const auto& counts = sampled.counts().value();
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), 500u);
    EXPECT_THROW(sample_quantum_distribution(truth, 1, 2, rng), std::invalid_argument);
}

TEST(Sampling, ClassicalKeepsTotalIntensity) {
    Rng rng(2);
    const std::vector<double> intensities{6.0, 2.0, 1.0, 1.0, 1.0, 1.0};
    const auto noisy = sample_classical_intensities(intensities, 1000, rng);
    EXPECT_NEAR(std::accumulate(noisy.begin(), noisy.end(), 0.0), 12.0, 1e-12);
}

TEST(Sampling, SameSeedSameCounts) {
    const std::vector<double> w{0.1, 0.2, 0.7};
    Rng a(77), b(77);
    EXPECT_EQ(sample_counts(w, 500, a), sample_counts(w, 500, b));
}

TEST(Bound, Values) {
    EXPECT_DOUBLE_EQ(classical_minimum_bound(6, 1e4), 0.05);
    EXPECT_DOUBLE_EQ(classical_minimum_bound(11, 100.0), 1.0);
    EXPECT_THROW(classical_minimum_bound(1, 10.0), std::invalid_argument);
}

TEST(Fits, RecoverExactLaws) {
    std::vector<std::pair<double, double>> rows;
    for (double n : {1e3, 1e4, 1e5, 1e6}) rows.emplace_back(n, 8.0 / std::sqrt(n));
    EXPECT_NEAR(fit_inverse_sqrt(rows), 8.0, 1e-12);
    EXPECT_NEAR(fit_log_log_slope(rows), -0.5, 1e-12);
    EXPECT_THROW(fit_inverse_sqrt(std::span(rows).first(1)), std::invalid_argument);
}

TEST(Sweep, SmokeAndDeterminism) {
    const auto state = psi6();
    const auto theta = PhaseVector::from_raw(std::vector<double>{0.0, 3.22, 4.10, 4.57, 1.35, 4.11});
    SweepOptions options;
    options.reference_restarts = 20;
    options.gs.max_iterations = 500;
    options.jobs = 2;
    const std::vector<std::uint64_t> budgets{1000, 100000};
    const auto a = run_sensitivity_sweep(state, theta, dft_matrix(6), budgets, 4, options, 5);
    options.jobs = 1;
    const auto b = run_sensitivity_sweep(state, theta, dft_matrix(6), budgets, 4, options, 5);
    ASSERT_EQ(a.rows.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(a.rows[i].q_mean_err, b.rows[i].q_mean_err);
        EXPECT_EQ(a.rows[i].q_std_err, b.rows[i].q_std_err);
        EXPECT_EQ(a.rows[i].cl_success_frac, b.rows[i].cl_success_frac);
        EXPECT_DOUBLE_EQ(a.rows[i].cl_min_bound, 5.0 / std::sqrt(static_cast<double>(budgets[i])));
    }
    EXPECT_THROW(run_sensitivity_sweep(state, theta, dft_matrix(6), std::vector<std::uint64_t>{}, 4, options, 5),
                 std::invalid_argument);
}
