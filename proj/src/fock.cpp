#include "qpr/fock.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qpr {

int FockConfig::photons() const {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string to_string(const FockConfig& config) {
    std::string out = "|";
    for (std::size_t i = 0; i < config.occupations.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(config.occupations[i]);
    }
    return out + ">";
}

std::uint64_t configuration_count(int modes, int photons) {
    if (modes < 1 || photons < 0) {
        throw std::domain_error("configuration_count: need modes >= 1 and photons >= 0");
    }
    // C(N+m-1, N) built incrementally; every partial product is itself a binomial.
    const auto n = static_cast<std::uint64_t>(photons);
    const auto r = static_cast<std::uint64_t>(modes - 1);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        const std::uint64_t factor = n + i;
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t reduced = result / g;
        const std::uint64_t divisor = i / g;
        if (factor / divisor > std::numeric_limits<std::uint64_t>::max() / reduced) {
            throw std::overflow_error("configuration_count: count overflows 64 bits");
        }
        result = reduced * (factor / divisor);
        // factor is divisible by divisor because result * factor / i is integral
        // and gcd(reduced, divisor) == 1.
    }
    return result;
}

namespace {

void enumerate(int modes, int remaining, std::vector<int>& prefix, std::vector<FockConfig>& out) {
    if (static_cast<int>(prefix.size()) == modes - 1) {
        prefix.push_back(remaining);
        out.push_back(FockConfig{prefix});
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        enumerate(modes, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

FockBasis::FockBasis(int modes, int photons) : modes_(modes), photons_(photons) {
    if (modes < 1 || photons < 1) {
        throw std::domain_error("FockBasis: need at least one mode and one photon");
    }
    const std::uint64_t count = configuration_count(modes, photons);
    if (count > kMaxBasisSize) {
        throw std::length_error("FockBasis: " + std::to_string(count) +
                                " configurations exceeds the supported basis size");
    }
    configs_.reserve(count);
    std::vector<int> prefix;
    prefix.reserve(modes);
    enumerate(modes, photons, prefix, configs_);
    for (std::size_t i = 0; i < configs_.size(); ++i) {
        index_.emplace(configs_[i].occupations, i);
    }
}

std::size_t FockBasis::index_of(const FockConfig& config) const {
    if (config.modes() != modes_) {
        throw std::invalid_argument("index_of: config " + to_string(config) + " has " +
                                    std::to_string(config.modes()) + " modes, basis has " +
                                    std::to_string(modes_));
    }
    for (int n : config.occupations) {
        if (n < 0) throw std::invalid_argument("index_of: negative occupation in " + to_string(config));
    }
    if (config.photons() != photons_) {
        throw std::invalid_argument("index_of: config " + to_string(config) + " holds " +
                                    std::to_string(config.photons()) + " photons, basis has " +
                                    std::to_string(photons_));
    }
    return index_.at(config.occupations);
}

BasisPtr enumerate_basis(int modes, int photons) {
    return std::make_shared<const FockBasis>(modes, photons);
}

namespace {

double squared_norm(std::span<const Complex> amplitudes) {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return sum;
}

}  // namespace

QuantumState::QuantumState(BasisPtr basis, std::vector<Complex> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) throw std::invalid_argument("QuantumState: null basis");
    if (amplitudes_.size() != basis_->size()) {
        throw std::invalid_argument("QuantumState: " + std::to_string(amplitudes_.size()) +
                                    " amplitudes for a basis of size " +
                                    std::to_string(basis_->size()));
    }
    const double n2 = squared_norm(amplitudes_);
    if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("QuantumState: squared norm " + std::to_string(n2) +
                                    " is not 1");
    }
}

QuantumState QuantumState::normalized(BasisPtr basis, std::vector<Complex> amplitudes) {
    const double n2 = squared_norm(amplitudes);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw std::invalid_argument("QuantumState::normalized: amplitudes are zero or not finite");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex& a : amplitudes) a *= scale;
    return QuantumState(std::move(basis), std::move(amplitudes));
}

double QuantumState::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

std::vector<std::size_t> QuantumState::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        if (amplitudes_[k] != Complex(0.0, 0.0)) out.push_back(k);
    }
    return out;
}

std::vector<double> mean_occupation(const QuantumState& state) {
    std::vector<double> mean(state.modes(), 0.0);
    const FockBasis& basis = state.basis();
    for (std::size_t k = 0; k < state.size(); ++k) {
        const double p = std::norm(state[k]);
        if (p == 0.0) continue;
        const auto& occ = basis[k].occupations;
        for (int x = 0; x < state.modes(); ++x) mean[x] += p * occ[x];
    }
    return mean;
}

}  // namespace qpr
