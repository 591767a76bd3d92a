#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qpr {

using Complex = std::complex<double>;

/// Occupation numbers n_1..n_m of one Fock configuration.
struct FockConfig {
    std::vector<int> occupations;

    int modes() const { return static_cast<int>(occupations.size()); }
    int photons() const;

    auto operator<=>(const FockConfig&) const = default;
};

std::string to_string(const FockConfig& config);

/// Bases larger than this are rejected; everything in this library is desk scale.
inline constexpr std::uint64_t kMaxBasisSize = 1'000'000;

/// Number of weak compositions of `photons` into `modes` parts, C(N+m-1, N).
/// Throws std::overflow_error when the count does not fit in 64 bits.
std::uint64_t configuration_count(int modes, int photons);

/// All N-photon configurations over m modes, in lexicographically descending
/// order of the occupation vector: (N,0,...,0) first, (0,...,0,N) last.
class FockBasis {
public:
    FockBasis(int modes, int photons);

    int modes() const { return modes_; }
    int photons() const { return photons_; }
    std::size_t size() const { return configs_.size(); }

    const FockConfig& operator[](std::size_t i) const { return configs_.at(i); }
    const std::vector<FockConfig>& configs() const { return configs_; }

    /// Position of `config` in the canonical order. Throws std::invalid_argument
    /// when the config has the wrong length or photon count.
    std::size_t index_of(const FockConfig& config) const;

    bool operator==(const FockBasis& other) const {
        return modes_ == other.modes_ && photons_ == other.photons_;
    }

private:
    int modes_;
    int photons_;
    std::vector<FockConfig> configs_;
    std::map<std::vector<int>, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Throws std::domain_error for m = 0 or N = 0, std::length_error past kMaxBasisSize.
BasisPtr enumerate_basis(int modes, int photons);

/// Pure state with a dense amplitude vector over a FockBasis. Immutable.
class QuantumState {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws std::invalid_argument on a size mismatch or when the squared norm
    /// differs from one by more than kNormTolerance.
    QuantumState(BasisPtr basis, std::vector<Complex> amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws on an all-zero vector.
    static QuantumState normalized(BasisPtr basis, std::vector<Complex> amplitudes);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_.at(i); }

    int modes() const { return basis_->modes(); }
    int photons() const { return basis_->photons(); }
    std::size_t size() const { return amplitudes_.size(); }

    double norm() const;

    /// Indices with an amplitude that is not exactly zero, ascending.
    std::vector<std::size_t> support() const;

private:
    BasisPtr basis_;
    std::vector<Complex> amplitudes_;
};

/// <n_x> = sum_k |alpha_k|^2 n_x^(k) for each mode.
std::vector<double> mean_occupation(const QuantumState& state);

}  // namespace qpr
