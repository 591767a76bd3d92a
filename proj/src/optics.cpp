#include "qpr/optics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpr {

double wrap_to_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative number plus 2pi can round up to exactly 2pi.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

PhaseVector PhaseVector::from_raw(std::span<const double> raw) {
    if (raw.empty()) throw std::invalid_argument("PhaseVector: no modes");
    std::vector<double> thetas(raw.size());
    thetas[0] = 0.0;
    for (std::size_t x = 1; x < raw.size(); ++x) {
        if (!std::isfinite(raw[x])) throw std::invalid_argument("PhaseVector: non-finite phase");
        thetas[x] = wrap_to_two_pi(raw[x] - raw[0]);
    }
    return PhaseVector(std::move(thetas));
}

PhaseVector PhaseVector::zeros(int modes) {
    if (modes < 1) throw std::invalid_argument("PhaseVector: no modes");
    return PhaseVector(std::vector<double>(modes, 0.0));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: data size does not match shape");
    }
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

namespace {

double identity_defect(const ComplexMatrix& product) {
    double worst = 0.0;
    for (std::size_t r = 0; r < product.rows(); ++r) {
        for (std::size_t c = 0; c < product.cols(); ++c) {
            const Complex expected = r == c ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(product(r, c) - expected));
        }
    }
    return worst;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(ComplexMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
    if (!matrix_.square() || matrix_.rows() == 0) {
        throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
    }
    const double defect = unitarity_defect();
    if (!(defect <= tolerance)) {
        throw std::invalid_argument("UnitaryMatrix: U U^dagger deviates from I by " +
                                    std::to_string(defect));
    }
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(matrix_.adjoint(), kUnitarityTolerance * 10);
}

double UnitaryMatrix::unitarity_defect() const { return identity_defect(matrix_ * matrix_.adjoint()); }

UnitaryMatrix dft_matrix(int modes) {
    if (modes < 1) throw std::domain_error("dft_matrix: need at least one mode");
    const auto m = static_cast<std::size_t>(modes);
    ComplexMatrix u(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            // Reduce x*y mod m first so the angle stays small and exact.
            const double angle = kTwoPi * static_cast<double>((x * y) % m) / static_cast<double>(m);
            u(x, y) = std::polar(scale, angle);
        }
    }
    return UnitaryMatrix(std::move(u));
}

QuantumState apply_phase_object(const QuantumState& state, std::span<const double> phases) {
    if (static_cast<int>(phases.size()) != state.modes()) {
        throw std::invalid_argument("apply_phase_object: " + std::to_string(phases.size()) +
                                    " phases for " + std::to_string(state.modes()) + " modes");
    }
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    const FockBasis& basis = state.basis();
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] == Complex(0.0)) continue;
        double phi = 0.0;
        const auto& occ = basis[k].occupations;
        for (std::size_t x = 0; x < phases.size(); ++x) phi += phases[x] * occ[x];
        out[k] *= std::polar(1.0, phi);
    }
    return QuantumState(state.basis_ptr(), std::move(out));
}

QuantumState apply_phase_object(const QuantumState& state, const PhaseVector& theta) {
    return apply_phase_object(state, theta.values());
}

Complex permanent(const ComplexMatrix& matrix) {
    if (!matrix.square()) throw std::invalid_argument("permanent: matrix is not square");
    const std::size_t n = matrix.rows();
    if (n == 0) throw std::invalid_argument("permanent: empty matrix");
    if (n > 30) throw std::length_error("permanent: matrices above 30x30 are not supported");

    std::vector<Complex> row_sums(n, Complex(0.0));
    Complex total(0.0);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const int col = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        const double delta = (gray & bit) ? 1.0 : -1.0;
        Complex product(1.0);
        for (std::size_t r = 0; r < n; ++r) {
            row_sums[r] += delta * matrix(r, col);
            product *= row_sums[r];
        }
        // (-1)^{n - |S|}
        const bool negative = ((n - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0;
        total += negative ? -product : product;
    }
    return total;
}

namespace {

void check_config(const UnitaryMatrix& u, const FockConfig& config, const char* what) {
    if (config.modes() != u.modes()) {
        throw std::invalid_argument(std::string("build_submatrix: ") + what + " config " +
                                    to_string(config) + " does not match " +
                                    std::to_string(u.modes()) + " modes");
    }
    for (int n : config.occupations) {
        if (n < 0) throw std::invalid_argument(std::string("build_submatrix: negative occupation in ") + what);
    }
}

std::vector<std::size_t> repeated_indices(const FockConfig& config) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < config.occupations.size(); ++x) {
        out.insert(out.end(), static_cast<std::size_t>(config.occupations[x]), x);
    }
    return out;
}

double factorial_product(const FockConfig& config) {
    double product = 1.0;
    for (int n : config.occupations) {
        for (int i = 2; i <= n; ++i) product *= i;
    }
    return product;
}

}  // namespace

ComplexMatrix build_submatrix(const UnitaryMatrix& u, const FockConfig& config_in,
                              const FockConfig& config_out) {
    check_config(u, config_in, "input");
    check_config(u, config_out, "output");
    if (config_in.photons() != config_out.photons()) {
        throw std::invalid_argument("build_submatrix: photon numbers differ between " +
                                    to_string(config_in) + " and " + to_string(config_out));
    }
    const auto rows = repeated_indices(config_in);
    const auto cols = repeated_indices(config_out);
    ComplexMatrix v(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) v(i, j) = u(rows[i], cols[j]);
    }
    return v;
}

Complex transition_amplitude(const UnitaryMatrix& u, const FockConfig& config_in,
                             const FockConfig& config_out) {
    const ComplexMatrix v = build_submatrix(u, config_in, config_out);
    return permanent(v) / std::sqrt(factorial_product(config_in) * factorial_product(config_out));
}

QuantumState multiphoton_transform(const QuantumState& state, const UnitaryMatrix& u) {
    if (u.modes() != state.modes()) {
        throw std::invalid_argument("multiphoton_transform: unitary has " + std::to_string(u.modes()) +
                                    " modes, state has " + std::to_string(state.modes()));
    }
    const FockBasis& basis = state.basis();
    std::vector<Complex> out(basis.size(), Complex(0.0));
    for (std::size_t k : state.support()) {
        const Complex alpha = state[k];
        for (std::size_t t = 0; t < basis.size(); ++t) {
            out[t] += alpha * transition_amplitude(u, basis[k], basis[t]);
        }
    }
    return QuantumState(state.basis_ptr(), std::move(out));
}

QuantumState inverse_transform(const QuantumState& state, const UnitaryMatrix& u) {
    return multiphoton_transform(state, u.adjoint());
}

MultiphotonTransfer::MultiphotonTransfer(BasisPtr basis, const UnitaryMatrix& u,
                                         std::vector<std::size_t> inputs)
    : basis_(std::move(basis)), inputs_(std::move(inputs)) {
    if (!basis_) throw std::invalid_argument("MultiphotonTransfer: null basis");
    if (u.modes() != basis_->modes()) {
        throw std::invalid_argument("MultiphotonTransfer: unitary and basis mode counts differ");
    }
    for (std::size_t k : inputs_) {
        if (k >= basis_->size()) throw std::out_of_range("MultiphotonTransfer: input index out of range");
    }
    const std::size_t d = basis_->size();
    const std::size_t s = inputs_.size();
    columns_.resize(d * s);
    for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t j = 0; j < s; ++j) {
            columns_[t * s + j] = transition_amplitude(u, (*basis_)[inputs_[j]], (*basis_)[t]);
        }
    }
}

void MultiphotonTransfer::forward(std::span<const Complex> in, std::span<Complex> output) const {
    const std::size_t s = inputs_.size();
    if (in.size() != s || output.size() != basis_->size()) {
        throw std::invalid_argument("MultiphotonTransfer::forward: size mismatch");
    }
    for (std::size_t t = 0; t < output.size(); ++t) {
        const Complex* row = columns_.data() + t * s;
        Complex acc(0.0);
        for (std::size_t j = 0; j < s; ++j) acc += row[j] * in[j];
        output[t] = acc;
    }
}

void MultiphotonTransfer::adjoint(std::span<const Complex> output, std::span<Complex> in) const {
    const std::size_t s = inputs_.size();
    if (in.size() != s || output.size() != basis_->size()) {
        throw std::invalid_argument("MultiphotonTransfer::adjoint: size mismatch");
    }
    std::fill(in.begin(), in.end(), Complex(0.0));
    for (std::size_t t = 0; t < output.size(); ++t) {
        const Complex* row = columns_.data() + t * s;
        const Complex b = output[t];
        for (std::size_t j = 0; j < s; ++j) in[j] += std::conj(row[j]) * b;
    }
}

}  // namespace qpr
