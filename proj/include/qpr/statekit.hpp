#pragma once

#include <optional>
#include <string>

#include "qpr/fock.hpp"
#include "qpr/retrieval.hpp"

namespace qpr {

/// Outcome of the two uniqueness checks on an input state.
struct StateReport {
    bool translation_symmetric = false;
    bool reflection_symmetric = false;
    std::vector<double> mean_occupation;
    std::optional<PhaseExtractor> extractor;
    std::optional<std::string> failure_reason;

    bool valid() const { return extractor.has_value(); }
};

/// (|2,0,0,0,0,0> + |1,1,0,0,0,0> + |1,0,1,0,0,0> + |1,0,0,1,0,0>
///  + |1,0,0,0,1,0> + |0,1,0,0,0,1>) / sqrt(6)
QuantumState psi6();

/// Configurations of the m-mode two-photon family, in construction order:
/// |2,0,...>, |1,1,0,...>, |1,0,..,1_j,..,0> for j = 3..m-1, |0,1,0,...,0,1>.
std::vector<FockConfig> generalized_support(int modes);

/// Equal-amplitude state over generalized_support(m). Reduces to psi6() at m = 6.
/// Throws std::domain_error for m < 6 and std::runtime_error when the
/// construction fails validate_state.
QuantumState generalized_state(int modes);

/// Checks (a) that the mean photon numbers are not invariant under any
/// nontrivial cyclic shift or any reflection of the mode ring, and (b) that
/// the support holds m configurations giving a unimodular phase extractor.
StateReport validate_state(const QuantumState& state);

/// Real amplitudes sqrt(<n_x>), scaled so the weakest lit mode has intensity 1.
/// For psi6 this gives {sqrt 6, sqrt 2, 1, 1, 1, 1}.
ClassicalField matched_classical_field(const QuantumState& state);

}  // namespace qpr
