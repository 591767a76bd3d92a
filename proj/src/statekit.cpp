#include "qpr/statekit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpr {

namespace {

FockConfig config_of(std::initializer_list<int> occupations) { return FockConfig{std::vector<int>(occupations)}; }

QuantumState equal_superposition(int modes, int photons, const std::vector<FockConfig>& configs) {
    BasisPtr basis = enumerate_basis(modes, photons);
    std::vector<Complex> amplitudes(basis->size(), Complex(0.0));
    const double a = 1.0 / std::sqrt(static_cast<double>(configs.size()));
    for (const FockConfig& c : configs) {
        const std::size_t k = basis->index_of(c);
        if (amplitudes[k] != Complex(0.0)) throw std::logic_error("equal_superposition: repeated configuration");
        amplitudes[k] = a;
    }
    return QuantumState(std::move(basis), std::move(amplitudes));
}

// Equality within a few ulps of the largest occupation.
bool same_occupation(const std::vector<double>& mean, const std::vector<double>& other) {
    const double scale = *std::max_element(mean.begin(), mean.end());
    const double tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t x = 0; x < mean.size(); ++x) {
        if (std::abs(mean[x] - other[x]) > tol) return false;
    }
    return true;
}

bool has_translation_symmetry(const std::vector<double>& mean) {
    const int m = static_cast<int>(mean.size());
    std::vector<double> shifted(mean.size());
    for (int s = 1; s < m; ++s) {
        for (int x = 0; x < m; ++x) shifted[x] = mean[(x + s) % m];
        if (same_occupation(mean, shifted)) return true;
    }
    return false;
}

bool has_reflection_symmetry(const std::vector<double>& mean) {
    const int m = static_cast<int>(mean.size());
    if (m == 1) return true;
    std::vector<double> mirrored(mean.size());
    for (int s = 0; s < m; ++s) {
        for (int x = 0; x < m; ++x) mirrored[x] = mean[((s - x) % m + m) % m];
        if (same_occupation(mean, mirrored)) return true;
    }
    return false;
}

// Upper bound on subsets examined before giving up; supports of size ~m need
// exactly one.
constexpr std::size_t kMaxSubsetsExamined = 2'000'000;

}  // namespace

QuantumState psi6() {
    return equal_superposition(6, 2,
                               {config_of({2, 0, 0, 0, 0, 0}), config_of({1, 1, 0, 0, 0, 0}),
                                config_of({1, 0, 1, 0, 0, 0}), config_of({1, 0, 0, 1, 0, 0}),
                                config_of({1, 0, 0, 0, 1, 0}), config_of({0, 1, 0, 0, 0, 1})});
}

std::vector<FockConfig> generalized_support(int modes) {
    if (modes < 6) throw std::domain_error("generalized_state: need at least 6 modes, got " + std::to_string(modes));
    const auto m = static_cast<std::size_t>(modes);
    std::vector<FockConfig> configs;
    auto unit = [&](std::size_t a, std::size_t b) {
        std::vector<int> occ(m, 0);
        ++occ[a];
        ++occ[b];
        return FockConfig{std::move(occ)};
    };
    configs.push_back(unit(0, 0));
    configs.push_back(unit(0, 1));
    for (std::size_t j = 2; j + 1 < m; ++j) configs.push_back(unit(0, j));
    configs.push_back(unit(1, m - 1));
    return configs;
}

QuantumState generalized_state(int modes) {
    QuantumState state = equal_superposition(modes, 2, generalized_support(modes));
    const StateReport report = validate_state(state);
    if (!report.valid()) {
        throw std::runtime_error("generalized_state(" + std::to_string(modes) +
                                 ") fails the uniqueness checks: " + report.failure_reason.value_or("unknown"));
    }
    return state;
}

StateReport validate_state(const QuantumState& state) {
    StateReport report;
    report.mean_occupation = mean_occupation(state);
    report.translation_symmetric = has_translation_symmetry(report.mean_occupation);
    report.reflection_symmetric = has_reflection_symmetry(report.mean_occupation);
    if (report.translation_symmetric || report.reflection_symmetric) {
        report.failure_reason = std::string("mean photon numbers are symmetric under ") +
                                (report.translation_symmetric ? "a cyclic translation" : "a reflection") +
                                " of the modes";
        return report;
    }

    const auto m = static_cast<std::size_t>(state.modes());
    const std::vector<std::size_t> support = state.support();
    if (support.size() < m) {
        report.failure_reason = "support has " + std::to_string(support.size()) +
                                " configurations, at least " + std::to_string(m) + " are needed";
        return report;
    }

    // Lexicographic scan over m-subsets of the support in canonical order.
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    std::size_t examined = 0;
    while (true) {
        std::vector<std::size_t> subset(m);
        for (std::size_t i = 0; i < m; ++i) subset[i] = support[pick[i]];
        if (auto extractor = PhaseExtractor::build(state.basis(), std::move(subset))) {
            report.extractor = std::move(extractor);
            return report;
        }
        if (++examined >= kMaxSubsetsExamined) {
            report.failure_reason = "no unimodular subset within the first " + std::to_string(examined) +
                                    " candidates";
            return report;
        }
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == support.size() - m + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    report.failure_reason = "no subset of the support gives a unimodular phase map";
    return report;
}

ClassicalField matched_classical_field(const QuantumState& state) {
    const std::vector<double> mean = mean_occupation(state);
    double weakest = 0.0;
    for (double n : mean) {
        if (n > 0.0 && (weakest == 0.0 || n < weakest)) weakest = n;
    }
    std::vector<Complex> amplitudes(mean.size());
    for (std::size_t x = 0; x < mean.size(); ++x) {
        double ratio = mean[x] / weakest;
        // Integer intensity ratios (6:2:1:... for psi6) come out a few ulps off.
        if (const double r = std::round(ratio); std::abs(ratio - r) <= 1e-12 * std::max(1.0, r)) ratio = r;
        amplitudes[x] = std::sqrt(ratio);
    }
    return ClassicalField(std::move(amplitudes));
}

}  // namespace qpr
