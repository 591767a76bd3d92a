#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qpr/fock.hpp"
#include "qpr/optics.hpp"

namespace qpr {

/// |a - 2pi round(a / 2pi)|, the distance from a to the nearest multiple of 2pi.
double wrap_phase_distance(double a);

/// sqrt(sum_{x>=2} wrap_phase_distance(est_x - truth_x)^2). Mode 1 is the gauge
/// reference and is skipped.
double phase_error(const PhaseVector& estimate, const PhaseVector& truth);

/// D output probabilities over a FockBasis, optionally backed by sampled counts.
class MeasuredDistribution {
public:
    static constexpr double kSumTolerance = 1e-9;

    static MeasuredDistribution from_probabilities(BasisPtr basis, std::vector<double> probabilities);
    static MeasuredDistribution from_counts(BasisPtr basis, std::vector<std::uint64_t> counts);
    /// |beta_t|^2 of an output state.
    static MeasuredDistribution exact(const QuantumState& output);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    std::span<const double> probabilities() const { return probabilities_; }
    const std::optional<std::vector<std::uint64_t>>& counts() const { return counts_; }
    std::size_t size() const { return probabilities_.size(); }

private:
    MeasuredDistribution(BasisPtr basis, std::vector<double> probabilities,
                         std::optional<std::vector<std::uint64_t>> counts);

    BasisPtr basis_;
    std::vector<double> probabilities_;
    std::optional<std::vector<std::uint64_t>> counts_;
};

/// Complex mode amplitudes of a classical coherent field.
class ClassicalField {
public:
    explicit ClassicalField(std::vector<Complex> amplitudes);

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    int modes() const { return static_cast<int>(amplitudes_.size()); }
    std::vector<double> magnitudes() const;
    std::vector<double> intensities() const;

private:
    std::vector<Complex> amplitudes_;
};

/// Far field sum_x U(x, y) E_x of an input field with known magnitudes and
/// object phases, as intensities.
std::vector<double> far_field_intensities(std::span<const double> magnitudes,
                                          std::span<const double> phases, const UnitaryMatrix& u);

/// sqrt(sum_t (|beta_t|^2 - P_t)^2)
double fourier_error(std::span<const Complex> beta, const MeasuredDistribution& measured);

/// sqrt(sum_x (|E_x|^2 - I_x)^2 / sum_x I_x)
double classical_fourier_error(std::span<const Complex> far_field,
                               std::span<const double> measured_intensities);

/// Maps configuration phases back to mode phases through m designated
/// configurations. With a reference configuration r from the subset, the
/// differences phi_k - phi_r = (n^(k) - n^(r)) . theta do not depend on the
/// global phase; dropping mode 1 (theta_1 = 0) leaves an (m-1) x (m-1) integer
/// system. It must be unimodular so that a 2pi shift of any phi maps to whole
/// 2pi shifts of theta.
class PhaseExtractor {
public:
    /// Returns std::nullopt when the subset does not give a unimodular system.
    static std::optional<PhaseExtractor> build(const FockBasis& basis, std::vector<std::size_t> subset);

    int modes() const { return modes_; }
    std::size_t basis_size() const { return basis_size_; }
    const std::vector<std::size_t>& subset_indices() const { return subset_; }
    /// Occupation rows n^(k) of the subset, m x m row-major.
    const std::vector<int>& occupation_matrix() const { return occupations_; }
    /// Gauge-reduced matrix, (m-1) x (m-1) row-major.
    const std::vector<long long>& reduced_matrix() const { return reduced_; }
    /// Its exact inverse, integral because the matrix is unimodular.
    const std::vector<long long>& reduced_inverse() const { return inverse_; }

private:
    PhaseExtractor() = default;

    int modes_ = 0;
    std::size_t basis_size_ = 0;
    std::vector<std::size_t> subset_;
    std::vector<int> occupations_;
    std::vector<long long> reduced_;
    std::vector<long long> inverse_;
};

/// Determinant of a small integer matrix (Bareiss elimination, exact).
long long integer_determinant(std::vector<long long> matrix, std::size_t n);

/// Solves phi_k = theta . n^(k) (mod 2pi, up to a global phase) for the
/// designated configurations. `config_phases` has one entry per basis config.
PhaseVector extract_phases(std::span<const double> config_phases, const PhaseExtractor& extractor);

struct GsOptions {
    int max_iterations = 5000;
    double fourier_tolerance = 1e-10;
    std::uint64_t rng_seed = 0;
    /// Overrides the random start; otherwise theta_x ~ U[0, 2pi) for x >= 2.
    std::optional<PhaseVector> initial_theta;
};

struct GsResult {
    PhaseVector retrieved_theta = PhaseVector::zeros(1);
    std::vector<double> fourier_error_trace;
    /// Filled only when the true phases are passed in.
    std::vector<double> phase_error_trace;
    int iterations = 0;
    bool converged = false;
    PhaseVector initial_theta = PhaseVector::zeros(1);

    double final_fourier_error() const;
    std::optional<double> final_phase_error() const;
};

/// Uniform theta in [0, 2pi) for modes 2..m, theta_1 = 0.
PhaseVector random_initial_theta(int modes, std::uint64_t seed);

/// Quantum Gerchberg-Saxton problem with the multiport transfer precomputed,
/// so that many restarts share the setup.
class QuantumGs {
public:
    QuantumGs(const QuantumState& input_state, const UnitaryMatrix& u, MeasuredDistribution measured,
              PhaseExtractor extractor);

    GsResult run(const GsOptions& options, const std::optional<PhaseVector>& truth = std::nullopt) const;

    /// |beta|^2 misfit of a candidate theta against the measured distribution.
    double fourier_error_of(const PhaseVector& theta) const;

    const MultiphotonTransfer& transfer() const { return transfer_; }

private:
    void forward(const PhaseVector& theta, std::span<Complex> beta) const;

    BasisPtr basis_;
    MultiphotonTransfer transfer_;
    std::vector<double> magnitudes_;    // |alpha_k| on the support
    std::vector<double> known_phases_;  // arg(alpha_k) on the support
    MeasuredDistribution measured_;
    std::vector<double> sqrt_probabilities_;
    PhaseExtractor extractor_;
};

GsResult quantum_gs(const QuantumState& input_state, const UnitaryMatrix& u,
                    const MeasuredDistribution& measured, const PhaseExtractor& extractor,
                    const GsOptions& options, const std::optional<PhaseVector>& truth = std::nullopt);

/// Classical error-reduction loop on m mode amplitudes.
class ClassicalGs {
public:
    ClassicalGs(std::vector<double> input_magnitudes, const UnitaryMatrix& u,
                std::vector<double> measured_intensities);

    GsResult run(const GsOptions& options, const std::optional<PhaseVector>& truth = std::nullopt) const;
    double fourier_error_of(const PhaseVector& theta) const;

private:
    void forward(const PhaseVector& theta, std::span<Complex> far) const;

    std::vector<double> magnitudes_;
    ComplexMatrix u_;
    std::vector<double> intensities_;
    std::vector<double> sqrt_intensities_;
};

GsResult classical_gs(std::span<const double> input_magnitudes, const UnitaryMatrix& u,
                      std::span<const double> measured_intensities, const GsOptions& options,
                      const std::optional<PhaseVector>& truth = std::nullopt);

struct SolutionCluster {
    PhaseVector representative;
    std::size_t count = 0;
    std::optional<bool> correct;  // set when a truth was supplied
};

/// Greedy clustering in input order: a result joins the first cluster whose
/// representative lies within `tolerance` (phase_error), otherwise it starts a
/// new one. Only converged results are grouped unless `include_unconverged`.
/// Sorted by count descending; ties keep first-seen order.
/// When `assignment` is given it receives, per result, the index of its
/// cluster in the returned order, or -1 for results that were skipped.
std::vector<SolutionCluster> cluster_solutions(std::span<const GsResult> results, double tolerance,
                                               const std::optional<PhaseVector>& truth = std::nullopt,
                                               bool include_unconverged = false,
                                               std::vector<long>* assignment = nullptr);

/// Index of the representative nearest to `theta` in phase_error.
std::size_t nearest_cluster(const PhaseVector& theta, std::span<const SolutionCluster> clusters);

enum class Ambiguity { correct, translation, reflection, nontrivial };

std::string_view to_string(Ambiguity ambiguity);

/// Cyclic translation: theta'_x = theta_{(x + shift) mod m}, re-gauged.
PhaseVector translated(const PhaseVector& theta, int shift);
/// Conjugate mirror image: theta'_x = -theta_{(shift - x) mod m}, re-gauged.
PhaseVector reflected(const PhaseVector& theta, int shift);

/// Compares against the truth, its m-1 nontrivial cyclic translations, then its
/// conjugate mirror images (all m reflection axes of the mode ring).
Ambiguity classify_ambiguity(const PhaseVector& candidate, const PhaseVector& truth, double tolerance);

}  // namespace qpr
