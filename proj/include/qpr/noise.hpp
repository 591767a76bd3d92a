#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qpr/fock.hpp"
#include "qpr/optics.hpp"
#include "qpr/retrieval.hpp"
#include "qpr/rng.hpp"

namespace qpr {

/// `draws` independent categorical samples with probabilities proportional to
/// `weights`, accumulated into per-outcome counts.
std::vector<std::uint64_t> sample_counts(std::span<const double> weights, std::uint64_t draws, Rng& rng);

/// floor(N_T / N) complete N-photon coincidence events drawn from `truth`.
/// Throws std::invalid_argument when N_T < N.
MeasuredDistribution sample_quantum_distribution(const MeasuredDistribution& truth, std::uint64_t total_photons,
                                                 int photon_number, Rng& rng);

/// N_T single-photon detections over the modes, returned as intensities
/// rescaled to the same total as `true_intensities`.
std::vector<double> sample_classical_intensities(std::span<const double> true_intensities,
                                                 std::uint64_t total_photons, Rng& rng);

/// (m - 1) / sqrt(N_T)
double classical_minimum_bound(int modes, double total_photons);

struct SweepRow {
    std::uint64_t n_total = 0;
    double q_mean_err = 0.0;           // mean quantum phase error over all trials
    double q_std_err = 0.0;            // sample standard deviation of the same
    double cl_mean_err_correct = 0.0;  // classical mean over runs classified correct; NaN if none
    double cl_success_frac = 0.0;
    double cl_min_bound = 0.0;
    // Diagnostics: quantum runs split the same way as the classical ones.
    double q_success_frac = 0.0;
    double q_mean_err_correct = 0.0;
};

struct SensitivitySweep {
    int modes = 0;
    std::vector<std::uint64_t> photon_budgets;
    int trials_per_budget = 0;
    std::vector<SweepRow> rows;
};

struct SweepOptions {
    GsOptions gs;
    /// Noiseless restarts used to map out the fixed points each noisy run is
    /// classified against.
    int reference_restarts = 200;
    double cluster_tolerance = 0.05;
    unsigned jobs = 1;
};

/// Monte-Carlo shot-noise sweep. For every budget and trial: sample the quantum
/// distribution and the matched classical intensities, run both GS loops from
/// random starts, and score against theta_obj. A run counts as correct when
/// theta_obj is nearer to its result than every other noiseless fixed point.
SensitivitySweep run_sensitivity_sweep(const QuantumState& state, const PhaseVector& theta_obj,
                                       const UnitaryMatrix& u, std::span<const std::uint64_t> budgets, int trials,
                                       const SweepOptions& options, std::uint64_t master_seed);

/// Least-squares c in error = c / sqrt(N_T).
double fit_inverse_sqrt(std::span<const std::pair<double, double>> rows);

/// Slope of log(error) against log(N_T).
double fit_log_log_slope(std::span<const std::pair<double, double>> rows);

}  // namespace qpr
