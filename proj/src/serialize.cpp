#include "qpr/serialize.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace qpr {

Json complex_array(std::span<const Complex> values) {
    Json out = Json::array();
    for (const Complex& c : values) out.push_back(Json::array({c.real(), c.imag()}));
    return out;
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw std::invalid_argument("expected a [re, im] pair of numbers");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

Json to_json(const QuantumState& state) {
    Json j;
    j["m"] = state.modes();
    j["N"] = state.photons();
    j["amplitudes"] = complex_array(state.amplitudes());
    return j;
}

QuantumState state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("N") || !j.contains("amplitudes")) {
        throw std::invalid_argument("state JSON needs m, N and amplitudes");
    }
    auto basis = enumerate_basis(j.at("m").get<int>(), j.at("N").get<int>());
    return QuantumState(std::move(basis), complex_vector_from_json(j.at("amplitudes")));
}

Json to_json(const UnitaryMatrix& u) { return complex_array(u.matrix().data()); }

UnitaryMatrix unitary_from_json(const Json& j) {
    auto entries = complex_vector_from_json(j);
    const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (m == 0 || m * m != entries.size()) {
        throw std::invalid_argument("unitary JSON must hold m * m entries");
    }
    return UnitaryMatrix(ComplexMatrix(m, m, std::move(entries)));
}

Json to_json(const PhaseVector& theta) {
    Json out = Json::array();
    for (double t : theta.values()) out.push_back(t);
    return out;
}

Json to_json(const GsResult& result) {
    Json j;
    j["retrieved_theta"] = to_json(result.retrieved_theta);
    j["initial_theta"] = to_json(result.initial_theta);
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    j["fourier_error_trace"] = result.fourier_error_trace;
    j["phase_error_trace"] = result.phase_error_trace;
    return j;
}

Json to_json(const PhaseExtractor& extractor, const FockBasis& basis) {
    Json j;
    Json configs = Json::array();
    for (std::size_t k : extractor.subset_indices()) {
        configs.push_back({{"index", k}, {"occupations", basis[k].occupations}});
    }
    j["configurations"] = std::move(configs);
    const auto n = static_cast<std::size_t>(extractor.modes() - 1);
    auto rows = [n](const std::vector<long long>& flat) {
        Json out = Json::array();
        for (std::size_t r = 0; r < n; ++r) {
            out.push_back(std::vector<long long>(flat.begin() + static_cast<long>(r * n),
                                                 flat.begin() + static_cast<long>((r + 1) * n)));
        }
        return out;
    };
    j["reduced_matrix"] = rows(extractor.reduced_matrix());
    j["reduced_inverse"] = rows(extractor.reduced_inverse());
    return j;
}

Json to_json(const StateReport& report, const FockBasis& basis) {
    Json j;
    j["valid"] = report.valid();
    j["translation_symmetric"] = report.translation_symmetric;
    j["reflection_symmetric"] = report.reflection_symmetric;
    j["mean_occupation"] = report.mean_occupation;
    j["extractor"] = report.extractor ? to_json(*report.extractor, basis) : Json(nullptr);
    j["failure_reason"] = report.failure_reason ? Json(*report.failure_reason) : Json(nullptr);
    return j;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    return fmt::format("{}", value);
}

void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs) {
    out << kRunCsvHeader << '\n';
    for (const RunRecord& r : runs) {
        out << r.run_id << ',' << r.seed << ',' << (r.converged ? "true" : "false") << ',' << r.iterations << ','
            << format_double(r.final_fourier_error) << ',' << format_double(r.final_phase_error) << ','
            << r.cluster_id << ',' << to_string(r.ambiguity) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SensitivitySweep& sweep) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& row : sweep.rows) {
        out << row.n_total << ',' << format_double(row.q_mean_err) << ',' << format_double(row.q_std_err) << ','
            << format_double(row.cl_mean_err_correct) << ',' << format_double(row.cl_success_frac) << ','
            << format_double(row.cl_min_bound) << '\n';
    }
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qpr
