// Copyright 2026 The isq Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <random>

#include <isq/qcond.hpp>
#include <isq/spin.hpp>

namespace {

using isq::CMatrix;
using isq::Complex;
using isq::MeasurementAxis;
using isq::PauliTensorBasis;
using isq::QuantumDensityMatrix;

QuantumDensityMatrix random_positive_rho(const PauliTensorBasis& basis,
                                         std::mt19937& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const int dim = basis.dim();
    CMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(nd(rng), nd(rng));
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return isq::rho_from_matrix(basis, rho);
}

/// The anticorrelated two-qubit state with r_{11}=r_{22}=r_{33}=-1.
QuantumDensityMatrix max_entangled(const PauliTensorBasis& basis) {
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(15);
    coeff[basis.flat_index({1, 1})] = -1.0;
    coeff[basis.flat_index({2, 2})] = -1.0;
    coeff[basis.flat_index({3, 3})] = -1.0;
    return isq::rho_from_coefficients(basis, coeff);
}

TEST(Positivity, SingleSpinDeltaViolates) {
    // The delta distribution on the all-down configuration maps to
    // coefficients (-1,-1,-1), which exceed the unit-ball constraint.
    const PauliTensorBasis basis(1);
    const auto rho = isq::rho_from_coefficients(basis, Eigen::Vector3d(-1, -1, -1));
    const auto report = isq::positivity_report(rho);
    EXPECT_FALSE(report.positive);
    EXPECT_GT(rho.coefficients.squaredNorm(), 1.0);
}

TEST(Positivity, SingleQubitBallCrossCheck) {
    std::mt19937 rng(5);
    std::normal_distribution<double> nd(0.0, 0.8);
    const PauliTensorBasis basis(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Vector3d v(nd(rng), nd(rng), nd(rng));
        const auto rho = isq::rho_from_coefficients(basis, v);
        const auto report = isq::positivity_report(rho);
        EXPECT_EQ(report.positive, v.squaredNorm() <= 1.0 + 1e-9);
    }
}

TEST(Positivity, DiagonalCounterexample) {
    const PauliTensorBasis basis(2);
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 7.0 / 20.0;
    m(1, 1) = 7.0 / 20.0;
    m(2, 2) = 7.0 / 20.0;
    m(3, 3) = -1.0 / 20.0;
    const auto rho = isq::rho_from_matrix(basis, m);
    EXPECT_FALSE(isq::positivity_report(rho).positive);
}

TEST(Positivity, EntangledPureState) {
    const PauliTensorBasis basis(2);
    Eigen::VectorXcd psi(4);
    psi << 0, 1, -1, 0;
    const auto rho = isq::rho_from_state(basis, psi);
    const auto report = isq::positivity_report(rho);
    EXPECT_TRUE(report.positive);
    EXPECT_TRUE(report.pure);
    EXPECT_NEAR(rho.coefficients.squaredNorm(), 3.0, 1e-12);
}

TEST(Positivity, PureTwoQubitAlgebraicConditions) {
    // Pure two-qubit states satisfy r.r = 3 and d_{zyw} r_z r_y = 2 r_w.
    std::mt19937 rng(8);
    std::normal_distribution<double> nd(0.0, 1.0);
    const PauliTensorBasis basis(2);
    const isq::StructureCoefficients sc(basis);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXcd psi(4);
        for (int i = 0; i < 4; ++i) {
            psi[i] = Complex(nd(rng), nd(rng));
        }
        const auto rho = isq::rho_from_state(basis, psi);
        EXPECT_NEAR(rho.coefficients.squaredNorm(), 3.0, 1e-10);
        for (int w = 0; w < basis.size(); ++w) {
            double contraction = 0.0;
            for (int z = 0; z < basis.size(); ++z) {
                for (int y = 0; y < basis.size(); ++y) {
                    contraction += sc.d(z, y, w) * rho.coefficients[z] *
                                   rho.coefficients[y];
                }
            }
            EXPECT_NEAR(contraction, 2.0 * rho.coefficients[w], 1e-10);
        }
    }
}

TEST(PairConstraints, MaxEntangledSectors) {
    const PauliTensorBasis basis(2);
    const auto report = isq::pair_constraints(basis, max_entangled(basis));
    EXPECT_TRUE(report.satisfied);
    // Pair (3,3): perfect anticorrelation puts all weight on the mixed
    // sign sectors.
    const auto& w33 = report.weights[8];
    EXPECT_NEAR(w33[0], 0.0, 1e-12);   // ++
    EXPECT_NEAR(w33[1], 0.5, 1e-12);   // +-
    EXPECT_NEAR(w33[2], 0.5, 1e-12);   // -+
    EXPECT_NEAR(w33[3], 0.0, 1e-12);   // --
}

TEST(PairConstraints, ProductState) {
    const PauliTensorBasis basis(2);
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(15);
    coeff[basis.flat_index({3, 0})] = 1.0;
    coeff[basis.flat_index({0, 3})] = 1.0;
    coeff[basis.flat_index({3, 3})] = 1.0;
    const auto report =
        isq::pair_constraints(basis, isq::rho_from_coefficients(basis, coeff));
    EXPECT_TRUE(report.satisfied);
    EXPECT_NEAR(report.weights[8][0], 1.0, 1e-12);
}

TEST(PairConstraints, PositivityImpliesAllPairs) {
    std::mt19937 rng(17);
    const PauliTensorBasis basis(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto rho = random_positive_rho(basis, rng);
        const auto report = isq::pair_constraints(basis, rho);
        EXPECT_TRUE(report.satisfied);
    }
}

TEST(PairConstraints, RejectsNonPositive) {
    const PauliTensorBasis basis(2);
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 7.0 / 20.0;
    m(1, 1) = 7.0 / 20.0;
    m(2, 2) = 7.0 / 20.0;
    m(3, 3) = -1.0 / 20.0;
    EXPECT_THROW(isq::pair_constraints(basis, isq::rho_from_matrix(basis, m)),
                 std::invalid_argument);
}

TEST(Chsh, SaturationCases) {
    const PauliTensorBasis basis(2);
    const auto rho = max_entangled(basis);
    const auto a = MeasurementAxis::along(1);
    const auto ap = MeasurementAxis::along(3);
    const auto b_minus3 = MeasurementAxis::along(3, -1);
    const auto b_plus3 = MeasurementAxis::along(3, +1);
    // Anti-diagonal measurement pairs reach the classical bound.
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_minus3, b_plus3), 2.0, 1e-12);
    // Flipping both signs of the second-qubit axes yields zero.
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_plus3, b_minus3), -2.0, 1e-12);
    // A second-axis choice for B' gives 1.
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_minus3,
                                MeasurementAxis::along(2, +1)),
                1.0, 1e-12);
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_minus3,
                                MeasurementAxis::along(2, -1)),
                1.0, 1e-12);
    // B' along the first axis gives 0; its reflection restores 2.
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_minus3,
                                MeasurementAxis::along(1, +1)),
                0.0, 1e-12);
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, ap, b_minus3,
                                MeasurementAxis::along(1, -1)),
                2.0, 1e-12);
    // Degenerate choice A' = A collapses to 2<AB>.
    EXPECT_NEAR(isq::chsh_value(basis, rho, a, a, b_minus3, b_minus3),
                2.0 * isq::axis_correlation(basis, rho, a, b_minus3), 1e-12);
}

TEST(Chsh, AxisAlignedGridBounded) {
    std::mt19937 rng(19);
    const PauliTensorBasis basis(2);
    std::vector<MeasurementAxis> axes;
    for (int k = 1; k <= 3; ++k) {
        for (int sign : {+1, -1}) {
            axes.push_back(MeasurementAxis::along(k, sign));
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = random_positive_rho(basis, rng);
        for (const auto& a : axes) {
            for (const auto& ap : axes) {
                for (const auto& b : axes) {
                    for (const auto& bp : axes) {
                        EXPECT_LE(std::abs(isq::chsh_value(basis, rho, a, ap, b, bp)),
                                  2.0 + 1e-10);
                    }
                }
            }
        }
    }
}

TEST(Chsh, TiltedAxesViolate) {
    const PauliTensorBasis basis(2);
    const auto rho = max_entangled(basis);
    const auto a = MeasurementAxis::along(3);
    const auto ap = MeasurementAxis::along(2);
    const double is2 = 1.0 / std::numbers::sqrt2;
    // Second-qubit axes at 45 degrees to the 3-axis inside the 2-3 plane.
    const MeasurementAxis b{Eigen::Vector3d(0.0, -is2, -is2)};
    const MeasurementAxis bp{Eigen::Vector3d(0.0, is2, -is2)};
    const double c = isq::chsh_value(basis, rho, a, ap, b, bp);
    EXPECT_GT(std::abs(c), 2.0);
    EXPECT_NEAR(std::abs(c), 2.0 * std::numbers::sqrt2, 1e-12);
}

TEST(Chsh, ClassicalTriplePerfectCorrelationImplication) {
    // For classical distributions over four spins (k, k', l, l'):
    // <s_k s_l> = <s_k s_l'> = <s_k' s_l> = 1 forces <s_k' s_l'> = 1.
    std::mt19937 rng(23);
    std::exponential_distribution<double> expd(1.0);
    for (int trial = 0; trial < 200; ++trial) {
        // Build a distribution satisfying the three perfect correlations:
        // support restricted to configurations with s1=s3, s1=s4, s2=s3.
        Eigen::VectorXd p = Eigen::VectorXd::Zero(16);
        for (std::size_t tau = 0; tau < 16; ++tau) {
            const int s1 = isq::spin_value(tau, 4, 1);
            const int s2 = isq::spin_value(tau, 4, 2);
            const int s3 = isq::spin_value(tau, 4, 3);
            const int s4 = isq::spin_value(tau, 4, 4);
            if (s1 == s3 && s1 == s4 && s2 == s3) {
                p[static_cast<Eigen::Index>(tau)] = expd(rng);
            }
        }
        p /= p.sum();
        const isq::ProbabilityDistribution dist(4, p);
        ASSERT_NEAR(isq::expectation(dist, {1, 3}), 1.0, 1e-12);
        ASSERT_NEAR(isq::expectation(dist, {1, 4}), 1.0, 1e-12);
        ASSERT_NEAR(isq::expectation(dist, {2, 3}), 1.0, 1e-12);
        EXPECT_NEAR(isq::expectation(dist, {2, 4}), 1.0, 1e-12);
    }
}

TEST(TwoLevel, AxisObservables) {
    const PauliTensorBasis basis(2);
    const isq::StructureCoefficients sc(basis);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(15);
    e[basis.flat_index({3, 0})] = 1.0;
    EXPECT_TRUE(isq::two_level_check(basis, sc, e));

    // An equal-weight sum of two commuting axis observables fails: the
    // anticommutator produces a third generator.
    Eigen::VectorXd mix = Eigen::VectorXd::Zero(15);
    mix[basis.flat_index({3, 0})] = 1.0 / std::numbers::sqrt2;
    mix[basis.flat_index({0, 3})] = 1.0 / std::numbers::sqrt2;
    EXPECT_FALSE(isq::two_level_check(basis, sc, mix));

    // The normalized commuting triplet is not a two-level observable either.
    Eigen::VectorXd triplet = Eigen::VectorXd::Zero(15);
    const double is3 = 1.0 / std::sqrt(3.0);
    triplet[basis.flat_index({3, 0})] = is3;
    triplet[basis.flat_index({0, 3})] = is3;
    triplet[basis.flat_index({3, 3})] = -is3;
    EXPECT_FALSE(isq::two_level_check(basis, sc, triplet));
}

TEST(TwoLevel, UnitaryOrbitStaysTwoLevel) {
    // Conjugating an axis observable by any unitary yields another valid
    // two-level observable.
    std::mt19937 rng(29);
    std::normal_distribution<double> nd(0.0, 1.0);
    const PauliTensorBasis basis(2);
    const isq::StructureCoefficients sc(basis);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix g(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                g(i, j) = Complex(nd(rng), nd(rng));
            }
        }
        const Eigen::HouseholderQR<CMatrix> qr(g);
        const CMatrix q = qr.householderQ();
        const CMatrix a =
            q * basis.generator(basis.flat_index({3, 0})) * q.adjoint();
        Eigen::VectorXd e(15);
        for (int z = 0; z < 15; ++z) {
            e[z] = (basis.generator(z) * a).trace().real() / 4.0;
        }
        EXPECT_TRUE(isq::two_level_check(basis, sc, e));
    }
}

TEST(M33Bound, SpectrumAndExamples) {
    const PauliTensorBasis basis(2);
    // The observable is diag(1,1,1,-3).
    CMatrix m = basis.generator(basis.flat_index({3, 0})) +
                basis.generator(basis.flat_index({0, 3})) -
                basis.generator(basis.flat_index({3, 3}));
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.diagonal() << 1, 1, 1, -3;
    EXPECT_NEAR((m - expected).norm(), 0.0, 1e-14);

    CMatrix top = CMatrix::Zero(4, 4);
    top(0, 0) = 1.0;
    EXPECT_NEAR(isq::m33_bound(isq::rho_from_matrix(basis, top)), 1.0, 1e-14);
    CMatrix bottom = CMatrix::Zero(4, 4);
    bottom(3, 3) = 1.0;
    EXPECT_NEAR(isq::m33_bound(isq::rho_from_matrix(basis, bottom)), -3.0, 1e-14);

    CMatrix counter = CMatrix::Zero(4, 4);
    counter.diagonal() << 7.0 / 20.0, 7.0 / 20.0, 7.0 / 20.0, -1.0 / 20.0;
    EXPECT_NEAR(isq::m33_bound(isq::rho_from_matrix(basis, counter)), 1.2, 1e-14);

    // Positive states stay within [-3, 1].
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = random_positive_rho(basis, rng);
        const double v = isq::m33_bound(rho);
        EXPECT_GE(v, -3.0 - 1e-10);
        EXPECT_LE(v, 1.0 + 1e-10);
    }
}

TEST(BasisDecomposition, ReassemblesRandomMatrices) {
    std::mt19937 rng(41);
    std::normal_distribution<double> nd(0.0, 1.0);
    const PauliTensorBasis basis(2);
    for (int trial = 0; trial < 100; ++trial) {
        // Arbitrary Hermitian trace-one matrix, positivity not required.
        CMatrix h(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                h(i, j) = Complex(nd(rng), nd(rng));
            }
        }
        CMatrix herm = (h + h.adjoint()) / 2.0;
        herm -= (herm.trace().real() - 1.0) / 4.0 * CMatrix::Identity(4, 4);
        const auto rho = isq::rho_from_matrix(basis, herm);
        const auto dec = isq::basis_decomposition(basis, rho);
        EXPECT_NEAR(dec.sum(), 1.0, 1e-10);
        EXPECT_NEAR((isq::reassemble_decomposition(basis, dec) - herm).norm(), 0.0,
                    1e-10);
    }
}

TEST(BasisDecomposition, MaximallyMixedIsUniform) {
    const PauliTensorBasis basis(2);
    const auto rho =
        isq::rho_from_coefficients(basis, Eigen::VectorXd::Zero(15));
    const auto dec = isq::basis_decomposition(basis, rho);
    for (const auto& row : dec.alpha) {
        for (double v : row) {
            EXPECT_NEAR(v, 1.0 / 36.0, 1e-14);
        }
    }
}

TEST(BasisDecomposition, BasisElementExact) {
    const PauliTensorBasis basis(2);
    const auto element = isq::pair_basis_state(basis, 3, 3, +1, +1);
    EXPECT_TRUE(isq::positivity_report(element).pure);
    const auto dec = isq::basis_decomposition(basis, element);
    EXPECT_NEAR((isq::reassemble_decomposition(basis, dec) - element.matrix).norm(),
                0.0, 1e-12);
}

}  // namespace
