#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpr/fock.hpp"
#include "qpr/noise.hpp"
#include "qpr/optics.hpp"
#include "qpr/retrieval.hpp"
#include "qpr/statekit.hpp"

namespace qpr {

using Json = nlohmann::ordered_json;

/// {"m": .., "N": .., "amplitudes": [[re, im], ...]} in canonical basis order.
Json to_json(const QuantumState& state);
QuantumState state_from_json(const Json& j);

/// Row-major [[re, im], ...] with m * m entries.
Json to_json(const UnitaryMatrix& u);
UnitaryMatrix unitary_from_json(const Json& j);

Json to_json(const PhaseVector& theta);
Json to_json(const GsResult& result);
Json to_json(const PhaseExtractor& extractor, const FockBasis& basis);
Json to_json(const StateReport& report, const FockBasis& basis);

/// Complex numbers as [re, im] pairs.
Json complex_array(std::span<const Complex> values);
std::vector<Complex> complex_vector_from_json(const Json& j);

/// Shortest round-trip decimal form; "nan" for NaN.
std::string format_double(double value);

struct RunRecord {
    std::size_t run_id = 0;
    std::uint64_t seed = 0;
    bool converged = false;
    int iterations = 0;
    double final_fourier_error = 0.0;
    double final_phase_error = 0.0;
    long cluster_id = -1;
    Ambiguity ambiguity = Ambiguity::nontrivial;
};

inline constexpr const char* kRunCsvHeader =
    "run_id,seed,converged,iterations,final_fourier_error,final_phase_error,cluster_id,ambiguity_class";
inline constexpr const char* kSweepCsvHeader =
    "n_total,q_mean_err,q_std_err,cl_mean_err_correct,cl_success_frac,cl_min_bound";

void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs);
void write_sweep_csv(std::ostream& out, const SensitivitySweep& sweep);

/// Two-space indented JSON followed by a newline.
std::string dump_pretty(const Json& j);

}  // namespace qpr
