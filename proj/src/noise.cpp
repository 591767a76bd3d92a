#include "qpr/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpr/parallel.hpp"
#include "qpr/statekit.hpp"

namespace qpr {

std::vector<std::uint64_t> sample_counts(std::span<const double> weights, std::uint64_t draws, Rng& rng) {
    if (weights.empty()) throw std::invalid_argument("sample_counts: no outcomes");
    std::vector<double> cumulative(weights.size());
    double total = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
            throw std::invalid_argument("sample_counts: weights must be finite and nonnegative");
        }
        total += weights[i];
        cumulative[i] = total;
        if (weights[i] > 0.0) last_positive = i;
    }
    if (!(total > 0.0)) throw std::invalid_argument("sample_counts: weights are all zero");

    std::vector<std::uint64_t> counts(weights.size(), 0);
    for (std::uint64_t d = 0; d < draws; ++d) {
        const double u = rng.uniform01() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto i = it == cumulative.end() ? last_positive : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[i];
    }
    return counts;
}

MeasuredDistribution sample_quantum_distribution(const MeasuredDistribution& truth, std::uint64_t total_photons,
                                                 int photon_number, Rng& rng) {
    if (photon_number < 1) throw std::invalid_argument("sample_quantum_distribution: photon number must be >= 1");
    const auto n = static_cast<std::uint64_t>(photon_number);
    if (total_photons < n) {
        throw std::invalid_argument("sample_quantum_distribution: budget of " + std::to_string(total_photons) +
                                    " photons is below one " + std::to_string(n) + "-photon event");
    }
    const std::uint64_t events = total_photons / n;
    return MeasuredDistribution::from_counts(truth.basis_ptr(), sample_counts(truth.probabilities(), events, rng));
}

std::vector<double> sample_classical_intensities(std::span<const double> true_intensities,
                                                 std::uint64_t total_photons, Rng& rng) {
    if (total_photons < 1) throw std::invalid_argument("sample_classical_intensities: need at least one photon");
    const auto counts = sample_counts(true_intensities, total_photons, rng);
    const double total = std::accumulate(true_intensities.begin(), true_intensities.end(), 0.0);
    std::vector<double> out(counts.size());
    for (std::size_t x = 0; x < counts.size(); ++x) {
        out[x] = total * static_cast<double>(counts[x]) / static_cast<double>(total_photons);
    }
    return out;
}

double classical_minimum_bound(int modes, double total_photons) {
    if (modes < 2) throw std::invalid_argument("classical_minimum_bound: need at least two modes");
    if (!(total_photons >= 1.0)) throw std::invalid_argument("classical_minimum_bound: need N_T >= 1");
    return static_cast<double>(modes - 1) / std::sqrt(total_photons);
}

namespace {

struct TrialOutcome {
    double quantum_error = 0.0;
    bool quantum_correct = false;
    double classical_error = 0.0;
    bool classical_correct = false;
};

// Truth first, then every noiseless fixed point that is not the truth.
std::vector<SolutionCluster> reference_points(std::span<const GsResult> runs, const PhaseVector& truth,
                                              double tolerance) {
    std::vector<SolutionCluster> points{{truth, 0, true}};
    for (auto& c : cluster_solutions(runs, tolerance, truth, /*include_unconverged=*/true)) {
        if (!c.correct.value_or(false)) points.push_back(std::move(c));
    }
    return points;
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const double mean = mean_of(values);
    double sum = 0.0;
    for (double v : values) sum += (v - mean) * (v - mean);
    return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

}  // namespace

SensitivitySweep run_sensitivity_sweep(const QuantumState& state, const PhaseVector& theta_obj,
                                       const UnitaryMatrix& u, std::span<const std::uint64_t> budgets, int trials,
                                       const SweepOptions& options, std::uint64_t master_seed) {
    if (budgets.empty()) throw std::invalid_argument("run_sensitivity_sweep: no photon budgets");
    for (std::size_t b = 0; b < budgets.size(); ++b) {
        if (budgets[b] == 0 || (b > 0 && budgets[b] <= budgets[b - 1])) {
            throw std::invalid_argument("run_sensitivity_sweep: budgets must be positive and ascending");
        }
    }
    if (trials < 1) throw std::invalid_argument("run_sensitivity_sweep: need at least one trial per budget");
    if (options.reference_restarts < 1) throw std::invalid_argument("run_sensitivity_sweep: need reference restarts");
    if (theta_obj.modes() != state.modes()) throw std::invalid_argument("run_sensitivity_sweep: theta size mismatch");

    StateReport report = validate_state(state);
    if (!report.valid()) {
        throw std::invalid_argument("run_sensitivity_sweep: input state fails validation: " +
                                    report.failure_reason.value_or(""));
    }
    const int m = state.modes();
    const auto exact = MeasuredDistribution::exact(multiphoton_transform(apply_phase_object(state, theta_obj), u));
    const auto field = matched_classical_field(state);
    const auto magnitudes = field.magnitudes();
    const auto intensities = far_field_intensities(magnitudes, theta_obj.values(), u);

    const QuantumGs quantum_noiseless(state, u, exact, *report.extractor);
    const ClassicalGs classical_noiseless(magnitudes, u, intensities);

    const std::size_t noisy_runs = budgets.size() * static_cast<std::size_t>(trials);
    const auto references = static_cast<std::size_t>(options.reference_restarts);
    std::vector<GsResult> quantum_reference(references);
    std::vector<GsResult> classical_reference(references);
    parallel_for(references, options.jobs, [&](std::size_t r) {
        Rng rng(derive_seed(master_seed, noisy_runs + r));
        GsOptions gs = options.gs;
        gs.initial_theta.reset();
        gs.rng_seed = rng.next();
        quantum_reference[r] = quantum_noiseless.run(gs);
        gs.rng_seed = rng.next();
        classical_reference[r] = classical_noiseless.run(gs);
    });
    const auto quantum_points = reference_points(quantum_reference, theta_obj, options.cluster_tolerance);
    const auto classical_points = reference_points(classical_reference, theta_obj, options.cluster_tolerance);

    std::vector<TrialOutcome> outcomes(noisy_runs);
    parallel_for(noisy_runs, options.jobs, [&](std::size_t i) {
        const std::uint64_t budget = budgets[i / static_cast<std::size_t>(trials)];
        Rng rng(derive_seed(master_seed, i));
        const auto sampled = sample_quantum_distribution(exact, budget, state.photons(), rng);
        const auto sampled_intensities = sample_classical_intensities(intensities, budget, rng);

        GsOptions gs = options.gs;
        gs.initial_theta.reset();
        gs.rng_seed = rng.next();
        const GsResult q = QuantumGs(state, u, sampled, *report.extractor).run(gs);
        gs.rng_seed = rng.next();
        const GsResult c = ClassicalGs(magnitudes, u, sampled_intensities).run(gs);

        TrialOutcome& out = outcomes[i];
        out.quantum_error = phase_error(q.retrieved_theta, theta_obj);
        out.quantum_correct = nearest_cluster(q.retrieved_theta, quantum_points) == 0;
        out.classical_error = phase_error(c.retrieved_theta, theta_obj);
        out.classical_correct = nearest_cluster(c.retrieved_theta, classical_points) == 0;
    });

    SensitivitySweep sweep;
    sweep.modes = m;
    sweep.photon_budgets.assign(budgets.begin(), budgets.end());
    sweep.trials_per_budget = trials;
    for (std::size_t b = 0; b < budgets.size(); ++b) {
        std::vector<double> q_all, q_correct, cl_correct;
        for (int j = 0; j < trials; ++j) {
            const TrialOutcome& o = outcomes[b * static_cast<std::size_t>(trials) + static_cast<std::size_t>(j)];
            q_all.push_back(o.quantum_error);
            if (o.quantum_correct) q_correct.push_back(o.quantum_error);
            if (o.classical_correct) cl_correct.push_back(o.classical_error);
        }
        SweepRow row;
        row.n_total = budgets[b];
        row.q_mean_err = mean_of(q_all);
        row.q_std_err = sample_std(q_all);
        row.cl_mean_err_correct = mean_of(cl_correct);
        row.cl_success_frac = static_cast<double>(cl_correct.size()) / trials;
        row.cl_min_bound = classical_minimum_bound(m, static_cast<double>(budgets[b]));
        row.q_success_frac = static_cast<double>(q_correct.size()) / trials;
        row.q_mean_err_correct = mean_of(q_correct);
        sweep.rows.push_back(row);
    }
    return sweep;
}

namespace {

void check_fit_rows(std::span<const std::pair<double, double>> rows, const char* who) {
    if (rows.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least two rows");
    for (const auto& [n, e] : rows) {
        if (!(n > 0.0) || !(e > 0.0) || !std::isfinite(n) || !std::isfinite(e)) {
            throw std::invalid_argument(std::string(who) + ": photon budgets and errors must be positive");
        }
    }
}

}  // namespace

double fit_inverse_sqrt(std::span<const std::pair<double, double>> rows) {
    check_fit_rows(rows, "fit_inverse_sqrt");
    // Minimise sum (e_i - c / sqrt(n_i))^2.
    double num = 0.0;
    double den = 0.0;
    for (const auto& [n, e] : rows) {
        num += e / std::sqrt(n);
        den += 1.0 / n;
    }
    return num / den;
}

double fit_log_log_slope(std::span<const std::pair<double, double>> rows) {
    check_fit_rows(rows, "fit_log_log_slope");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [n, e] : rows) {
        const double x = std::log(n);
        const double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(rows.size());
    const double den = k * sxx - sx * sx;
    if (den == 0.0) throw std::invalid_argument("fit_log_log_slope: all photon budgets are equal");
    return (k * sxy - sx * sy) / den;
}

}  // namespace qpr
