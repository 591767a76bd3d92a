#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "qpr/fock.hpp"

namespace qpr {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2pi).
double wrap_to_two_pi(double angle);

/// Per-mode object phases in the theta_1 = 0 gauge, each entry in [0, 2pi).
class PhaseVector {
public:
    /// Shifts every entry by -raw[0] and wraps into [0, 2pi).
    static PhaseVector from_raw(std::span<const double> raw);
    static PhaseVector zeros(int modes);

    int modes() const { return static_cast<int>(thetas_.size()); }
    std::span<const double> values() const { return thetas_; }
    double operator[](std::size_t x) const { return thetas_.at(x); }

    bool operator==(const PhaseVector&) const = default;

private:
    explicit PhaseVector(std::vector<double> thetas) : thetas_(std::move(thetas)) {}
    std::vector<double> thetas_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    static ComplexMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// m x m matrix with U U^dagger = I. The linear-optical network maps
/// a_x^dagger -> sum_y U(x, y) a_y^dagger.
class UnitaryMatrix {
public:
    static constexpr double kUnitarityTolerance = 1e-12;

    /// Throws std::invalid_argument when `matrix` is not square or
    /// max |(U U^dagger - I)_ij| exceeds `tolerance`.
    explicit UnitaryMatrix(ComplexMatrix matrix, double tolerance = kUnitarityTolerance);

    int modes() const { return static_cast<int>(matrix_.rows()); }
    const Complex& operator()(std::size_t x, std::size_t y) const { return matrix_(x, y); }
    const ComplexMatrix& matrix() const { return matrix_; }
    UnitaryMatrix adjoint() const;

    /// Largest elementwise deviation of U U^dagger from the identity.
    double unitarity_defect() const;

private:
    ComplexMatrix matrix_;
};

/// [U]_{x,y} = exp(i 2 pi x y / m) / sqrt(m), zero-based x, y.
UnitaryMatrix dft_matrix(int modes);

/// Multiplies amplitude k by exp(i theta . n^(k)). `phases` need not be gauge fixed.
QuantumState apply_phase_object(const QuantumState& state, std::span<const double> phases);
QuantumState apply_phase_object(const QuantumState& state, const PhaseVector& theta);

/// Ryser's formula with Gray-code ordering of column subsets, O(2^n n).
Complex permanent(const ComplexMatrix& matrix);

/// N x N matrix taking row x of U n_x^(in) times and column y n_y^(out) times.
ComplexMatrix build_submatrix(const UnitaryMatrix& u, const FockConfig& config_in,
                              const FockConfig& config_out);

/// <out| U |in> = Per(V) / sqrt(prod n_x^(in)! prod n_y^(out)!).
Complex transition_amplitude(const UnitaryMatrix& u, const FockConfig& config_in,
                             const FockConfig& config_out);

/// Output state of the multiport. Only input configurations with an amplitude
/// that is exactly nonzero contribute.
QuantumState multiphoton_transform(const QuantumState& state, const UnitaryMatrix& u);

/// multiphoton_transform with U^dagger.
QuantumState inverse_transform(const QuantumState& state, const UnitaryMatrix& u);

/// Columns of the D x D multiphoton matrix for a fixed set of input
/// configurations, precomputed for repeated application.
class MultiphotonTransfer {
public:
    MultiphotonTransfer(BasisPtr basis, const UnitaryMatrix& u, std::vector<std::size_t> inputs);

    std::size_t output_size() const { return basis_->size(); }
    std::size_t input_size() const { return inputs_.size(); }
    const std::vector<std::size_t>& inputs() const { return inputs_; }
    const FockBasis& basis() const { return *basis_; }

    /// output[t] = sum_j T(t, inputs[j]) in[j]
    void forward(std::span<const Complex> in, std::span<Complex> output) const;
    /// in[j] = sum_t conj(T(t, inputs[j])) output[t], the inputs' rows of U^dagger's transfer.
    void adjoint(std::span<const Complex> output, std::span<Complex> in) const;

private:
    BasisPtr basis_;
    std::vector<std::size_t> inputs_;
    std::vector<Complex> columns_;  // output-major: columns_[t * inputs + j]
};

}  // namespace qpr
