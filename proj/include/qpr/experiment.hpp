#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpr/serialize.hpp"

namespace qpr {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm { quantum, classical, both };

struct StateSpec {
    std::string builder = "psi6";  // "psi6" | "generalized" | "explicit"
    std::vector<Complex> amplitudes;  // explicit builder only

    bool operator==(const StateSpec&) const = default;
};

struct NoiseSpec {
    std::vector<std::uint64_t> budgets;
    int trials = 200;
    int reference_restarts = 200;

    bool operator==(const NoiseSpec&) const = default;
};

struct ExperimentConfig {
    int mode_count = 6;
    int photon_number = 2;
    StateSpec state;
    std::optional<std::vector<double>> theta_obj;
    Algorithm algorithm = Algorithm::both;
    int runs = 0;
    std::uint64_t seed = 0;
    int max_iterations = 5000;
    double fourier_tolerance = 1e-10;
    double cluster_tolerance = 0.05;
    double correct_tolerance = 1e-3;
    std::optional<NoiseSpec> noise;
    std::string output_dir = ".";

    bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError with the offending field named.
ExperimentConfig parse_config(const Json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
Json to_json(const ExperimentConfig& config);

QuantumState build_state(const ExperimentConfig& config);
PhaseVector theta_obj_of(const ExperimentConfig& config);

struct CommandContext {
    std::ostream& out;
    std::ostream& err;
    unsigned jobs = 1;
    std::filesystem::path out_dir = ".";
};

/// Per-algorithm batch summary shared by `retrieve` and `generalize`.
struct BatchSummary {
    std::vector<GsResult> results;
    std::vector<RunRecord> records;
    std::vector<SolutionCluster> clusters;
    double success_fraction = 0.0;
    double converged_fraction = 0.0;
    /// Median iteration count over runs that met the Fourier tolerance.
    std::optional<double> median_iterations_converged;
};

BatchSummary run_quantum_batch(const QuantumState& state, const UnitaryMatrix& u, const PhaseVector& theta_obj,
                               const ExperimentConfig& config, unsigned jobs);
BatchSummary run_classical_batch(const QuantumState& state, const UnitaryMatrix& u, const PhaseVector& theta_obj,
                                 const ExperimentConfig& config, unsigned jobs);
Json to_json(const BatchSummary& summary, const PhaseVector& theta_obj, double correct_tolerance);

int cmd_check_state(const ExperimentConfig& config, CommandContext& ctx);
int cmd_retrieve(const ExperimentConfig& config, CommandContext& ctx);
int cmd_sweep_noise(const ExperimentConfig& config, CommandContext& ctx);

struct GeneralizeRequest {
    int modes = 10;
    int runs = 200;
    std::optional<int> classical_runs;
    std::uint64_t seed = 0;
    int max_iterations = 5000;
    double fourier_tolerance = 1e-10;
};
int cmd_generalize(const GeneralizeRequest& request, CommandContext& ctx);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpr
