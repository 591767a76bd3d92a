#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qpr/optics.hpp"
#include "qpr/statekit.hpp"

using namespace qpr;

namespace {

QuantumState random_state(int m, int n, std::mt19937_64& engine) {
    std::normal_distribution<double> gauss;
    auto basis = enumerate_basis(m, n);
    std::vector<Complex> amps(basis->size());
    for (auto& a : amps) a = {gauss(engine), gauss(engine)};
    return QuantumState::normalized(basis, amps);
}

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& engine) {
    std::normal_distribution<double> gauss;
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = {gauss(engine), gauss(engine)};
    }
    return a;
}

}  // namespace

TEST(Phase, WrapToTwoPi) {
    EXPECT_DOUBLE_EQ(wrap_to_two_pi(-0.5), kTwoPi - 0.5);
    EXPECT_DOUBLE_EQ(wrap_to_two_pi(kTwoPi), 0.0);
    EXPECT_NEAR(wrap_to_two_pi(7.0), 7.0 - kTwoPi, 1e-15);
}

TEST(Phase, FromRawFixesGauge) {
    const std::vector<double> raw{1.0, 2.0, 0.5};
    const auto theta = PhaseVector::from_raw(raw);
    EXPECT_EQ(theta[0], 0.0);
    EXPECT_NEAR(theta[1], 1.0, 1e-15);
    EXPECT_NEAR(theta[2], kTwoPi - 0.5, 1e-15);
}

TEST(Permanent, SmallCases) {
    ComplexMatrix one(1, 1, {Complex(2.0, 1.0)});
    EXPECT_EQ(permanent(one), Complex(2.0, 1.0));
    ComplexMatrix two(2, 2, {1.0, 2.0, 3.0, 4.0});
    EXPECT_NEAR(std::abs(permanent(two) - Complex(10.0)), 0.0, 1e-14);
    ComplexMatrix ones(3, 3, std::vector<Complex>(9, 1.0));
    EXPECT_NEAR(permanent(ones).real(), 6.0, 1e-13);
}

TEST(Permanent, MatchesPermutationSum) {
    std::mt19937_64 engine(11);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto a = random_matrix(n, engine);
            EXPECT_LT(std::abs(permanent(a) - oracle::naive_permanent(a)), 1e-10 * (1.0 + std::abs(oracle::naive_permanent(a))));
        }
    }
}

TEST(Permanent, RejectsBadShapes) {
    EXPECT_THROW(permanent(ComplexMatrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(permanent(ComplexMatrix()), std::invalid_argument);
}

TEST(Dft, UnitaryAndEntries) {
    for (int m = 2; m <= 30; ++m) EXPECT_LT(dft_matrix(m).unitarity_defect(), 1e-12) << m;
    const auto u = dft_matrix(4);
    EXPECT_NEAR(std::abs(u(1, 1) - Complex(0.0, 0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 3) - Complex(0.5, 0.0)), 0.0, 1e-15);
}

TEST(Unitary, RejectsNonUnitary) {
    EXPECT_THROW(UnitaryMatrix(ComplexMatrix(2, 2, {1.0, 1.0, 0.0, 1.0})), std::invalid_argument);
    EXPECT_THROW(UnitaryMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(Submatrix, RepeatsRowsAndColumns) {
    const auto u = dft_matrix(3);
    const auto v = build_submatrix(u, {{2, 0, 1}}, {{0, 3, 0}});
    ASSERT_EQ(v.rows(), 3u);
    EXPECT_EQ(v(0, 0), u(0, 1));
    EXPECT_EQ(v(1, 2), u(0, 1));
    EXPECT_EQ(v(2, 1), u(2, 1));
    EXPECT_THROW(build_submatrix(u, {{1, 0, 0}}, {{1, 1, 0}}), std::invalid_argument);
}

TEST(Transform, HongOuMandel) {
    auto basis = enumerate_basis(2, 2);
    std::vector<Complex> amps(3, 0.0);
    amps[basis->index_of({{1, 1}})] = 1.0;
    const auto out = multiphoton_transform(QuantumState(basis, amps), dft_matrix(2));
    EXPECT_LT(std::abs(out[basis->index_of({{1, 1}})]), 1e-14);
    EXPECT_NEAR(std::norm(out[basis->index_of({{2, 0}})]), 0.5, 1e-14);
    EXPECT_NEAR(std::norm(out[basis->index_of({{0, 2}})]), 0.5, 1e-14);
}

TEST(Transform, MatchesCreationOperatorOracle) {
    std::mt19937_64 engine(5);
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const auto u = oracle::random_unitary(m, engine());
            const auto state = random_state(m, n, engine);
            std::map<oracle::Occupations, Complex> input;
            for (std::size_t k = 0; k < state.size(); ++k) input[state.basis()[k].occupations] = state[k];
            const auto expected = oracle::brute_force_transform(input, u);
            const auto out = multiphoton_transform(state, u);
            for (std::size_t t = 0; t < out.size(); ++t) {
                EXPECT_LT(std::abs(out[t] - expected.at(out.basis()[t].occupations)), 1e-10);
            }
        }
    }
}

TEST(Transform, InverseUndoesForward) {
    std::mt19937_64 engine(8);
    const auto u = oracle::random_unitary(4, 3);
    const auto state = random_state(4, 3, engine);
    const auto back = inverse_transform(multiphoton_transform(state, u), u);
    for (std::size_t k = 0; k < state.size(); ++k) EXPECT_LT(std::abs(back[k] - state[k]), 1e-12);
}

TEST(Transform, PhaseObjectIsDiagonal) {
    const auto s = psi6();
    const std::vector<double> theta{0.0, 0.3, 0.0, 0.0, 0.0, 1.1};
    const auto shifted = apply_phase_object(s, theta);
    const auto k = s.basis().index_of({{0, 1, 0, 0, 0, 1}});
    EXPECT_NEAR(std::arg(shifted[k]), 1.4, 1e-14);
    EXPECT_NEAR(std::arg(shifted[0]), 0.0, 1e-14);
}

TEST(Transfer, ForwardAndAdjointMatchFullTransform) {
    const auto s = psi6();
    const auto u = dft_matrix(6);
    const MultiphotonTransfer transfer(s.basis_ptr(), u, s.support());
    std::vector<Complex> in;
    for (auto k : s.support()) in.push_back(s[k]);
    std::vector<Complex> out(s.size());
    transfer.forward(in, out);
    const auto full = multiphoton_transform(s, u);
    for (std::size_t t = 0; t < out.size(); ++t) EXPECT_LT(std::abs(out[t] - full[t]), 1e-13);
    std::vector<Complex> back(in.size());
    transfer.adjoint(out, back);
    for (std::size_t j = 0; j < in.size(); ++j) EXPECT_LT(std::abs(back[j] - in[j]), 1e-13);
}
