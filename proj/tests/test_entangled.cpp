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
#include "isq/entangled.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isq/maps.hpp"
#include "isq/pauli.hpp"
#include "isq/qcond.hpp"
#include "isq/spin.hpp"

namespace isq {
namespace {

constexpr double kPi = std::numbers::pi;

// Quantum density matrix of the two-qubit pure state (0, cos t, sin t, 0).
QuantumDensityMatrix theta_pure_state(const PauliTensorBasis& basis, double theta) {
    Eigen::Vector4cd psi(0.0, std::cos(theta), std::sin(theta), 0.0);
    return rho_from_matrix(basis, CMatrix(psi * psi.adjoint()));
}

// Marginal probabilities of the pair (s_k of qubit 1, s_k of qubit 2) in the
// order (++, +-, -+, --).
Eigen::Vector4d sector_marginal(const ProbabilityDistribution& dist, int k) {
    Eigen::Vector4d out = Eigen::Vector4d::Zero();
    for (Eigen::Index tau = 0; tau < 64; ++tau) {
        const int first = spin_value(tau, 6, k);
        const int second = spin_value(tau, 6, k + 3);
        const int idx = (first > 0 ? 0 : 2) + (second > 0 ? 0 : 1);
        out[idx] += dist.p[tau];
    }
    return out;
}

TEST(SectorWaveFunction, CanonicalIndexPlacesAllSpinsUp) {
    SectorWaveFunction sectors;
    sectors.q1 = Eigen::Vector4d(1, 0, 0, 0);
    sectors.q2 = Eigen::Vector4d(1, 0, 0, 0);
    sectors.q3 = Eigen::Vector4d(1, 0, 0, 0);
    const ProbabilityDistribution dist = sectors.distribution();
    EXPECT_NEAR(dist.p[63], 1.0, 1e-15);
    EXPECT_NEAR(dist.p.sum(), 1.0, 1e-15);
}

TEST(EntangledFamily, MaximallyEntangledStateIsUniformOnAntialignedConfigs) {
    const EntangledFamilyState state = entangled_family(-kPi / 4.0);
    for (Eigen::Index tau = 0; tau < 64; ++tau) {
        bool antialigned = true;
        for (int k = 1; k <= 3; ++k) {
            antialigned = antialigned && spin_value(tau, 6, k) != spin_value(tau, 6, k + 3);
        }
        EXPECT_NEAR(state.dist.p[tau], antialigned ? 0.125 : 0.0, 1e-14) << tau;
    }
}

TEST(EntangledFamily, GridExtractionMatchesPureState) {
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    const PauliTensorBasis basis(2);
    for (int i = 0; i < 64; ++i) {
        const double theta = 2.0 * kPi * i / 64.0;
        const EntangledFamilyState state = entangled_family(theta);
        const QuantumDensityMatrix extracted = extract_rho(map, state.dist);
        const QuantumDensityMatrix expected = theta_pure_state(basis, theta);
        EXPECT_LT((extracted.coefficients - expected.coefficients).lpNorm<Eigen::Infinity>(),
                  1e-12)
            << theta;
        const PositivityReport pos = positivity_report(extracted);
        EXPECT_TRUE(pos.positive);
        EXPECT_TRUE(pos.pure);
        EXPECT_TRUE(pair_constraints(basis, extracted).satisfied);
    }
}

TEST(EntangledFamily, SectorProbabilitiesFactorize) {
    const double theta = 0.7;
    const EntangledFamilyState state = entangled_family(theta);
    const double a = 0.5 * (std::cos(theta) + std::sin(theta));
    const double b = 0.5 * (std::cos(theta) - std::sin(theta));
    for (const int k : {1, 2}) {
        const Eigen::Vector4d marginal = sector_marginal(state.dist, k);
        EXPECT_NEAR(marginal[0], a * a, 1e-14);
        EXPECT_NEAR(marginal[1], b * b, 1e-14);
        EXPECT_NEAR(marginal[2], b * b, 1e-14);
        EXPECT_NEAR(marginal[3], a * a, 1e-14);
    }
    const Eigen::Vector4d third = sector_marginal(state.dist, 3);
    EXPECT_NEAR(third[0], 0.0, 1e-14);
    EXPECT_NEAR(third[1], std::cos(theta) * std::cos(theta), 1e-14);
    EXPECT_NEAR(third[2], std::sin(theta) * std::sin(theta), 1e-14);
    EXPECT_NEAR(third[3], 0.0, 1e-14);
    // The joint distribution is the product of its sector marginals.
    for (Eigen::Index tau = 0; tau < 64; ++tau) {
        double product = 1.0;
        for (int k = 1; k <= 3; ++k) {
            const int idx = (spin_value(tau, 6, k) > 0 ? 0 : 2) +
                            (spin_value(tau, 6, k + 3) > 0 ? 0 : 1);
            product *= sector_marginal(state.dist, k)[idx];
        }
        EXPECT_NEAR(state.dist.p[tau], product, 1e-13);
    }
}

TEST(EntangledFamily, CoefficientSpotChecks) {
    const PauliTensorBasis basis(2);
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    // theta = pi/3.
    const QuantumDensityMatrix third =
        extract_rho(map, entangled_family(kPi / 3.0).dist);
    EXPECT_NEAR(third.coefficients[basis.flat_index({1, 1})], std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_NEAR(third.coefficients[basis.flat_index({2, 2})], std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_NEAR(third.coefficients[basis.flat_index({3, 0})], -0.5, 1e-12);
    EXPECT_NEAR(third.coefficients[basis.flat_index({0, 3})], 0.5, 1e-12);
    // theta = 0 collapses to the product state with qubit 1 up, qubit 2 down.
    const QuantumDensityMatrix zero = extract_rho(map, entangled_family(0.0).dist);
    EXPECT_NEAR(zero.coefficients[basis.flat_index({3, 0})], 1.0, 1e-12);
    EXPECT_NEAR(zero.coefficients[basis.flat_index({0, 3})], -1.0, 1e-12);
    EXPECT_NEAR(zero.coefficients[basis.flat_index({3, 3})], -1.0, 1e-12);
}

TEST(EntangledFamily, SignChoicesDoNotAffectProbabilities) {
    const ProbabilityDistribution reference = entangled_family(1.1, 1, 1).dist;
    for (const int e1 : {1, -1}) {
        for (const int e2 : {1, -1}) {
            const ProbabilityDistribution dist = entangled_family(1.1, e1, e2).dist;
            EXPECT_LT((dist.p - reference.p).lpNorm<Eigen::Infinity>(), 1e-15);
        }
    }
    EXPECT_THROW(static_cast<void>(entangled_family(1.1, 2, 1)), std::invalid_argument);
}

TEST(ProductState, AllParameterChoicesRealizeTheSameState) {
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    const PauliTensorBasis basis(2);
    Eigen::Vector4cd up_up(1.0, 0.0, 0.0, 0.0);
    const QuantumDensityMatrix expected =
        rho_from_matrix(basis, CMatrix(up_up * up_up.adjoint()));
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unif(0.2, 2.0);
    // Within the balanced subfamily |a| = |b|, |c| = |d| every choice of
    // magnitudes and signs induces the same quantum state.
    for (int trial = 0; trial < 12; ++trial) {
        const double a = unif(rng);
        const double c = unif(rng);
        const double b = trial % 2 == 0 ? a : -a;
        const double d = trial % 3 == 0 ? c : -c;
        const int s1 = trial % 2 == 0 ? 1 : -1;
        const int s2 = trial % 3 == 0 ? 1 : -1;
        const SectorWaveFunction sectors = product_state_wavefunction(a, b, c, d, s1, s2);
        const QuantumDensityMatrix extracted = extract_rho(map, sectors.distribution());
        EXPECT_LT((extracted.coefficients - expected.coefficients).lpNorm<Eigen::Infinity>(),
                  1e-12)
            << trial;
        EXPECT_NO_THROW(
            static_cast<void>(NormalizedClassicalWaveFunction(sectors.wavefunction())));
    }
    EXPECT_THROW(static_cast<void>(product_state_wavefunction(0.0, 0.0, 1.0, 0.0)),
                 std::invalid_argument);
}

TEST(ProductState, UnbalancedParametersShiftOnlySameSectorCorrelations) {
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    const PauliTensorBasis basis(2);
    const double a = 2.0, b = 1.0, c = 3.0, d = 1.0;
    const SectorWaveFunction sectors = product_state_wavefunction(a, b, c, d);
    const QuantumDensityMatrix extracted = extract_rho(map, sectors.distribution());
    // Single-spin coefficients and the third sector stay at the target
    // values, but the same-sector correlations pick up the imbalance: such a
    // distribution does not realize the pure both-up state.
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({3, 0})], 1.0, 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({0, 3})], 1.0, 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({3, 3})], 1.0, 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({1, 0})], 0.0, 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({0, 2})], 0.0, 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({1, 1})],
                (a * a - b * b) / (a * a + b * b), 1e-12);
    EXPECT_NEAR(extracted.coefficients[basis.flat_index({2, 2})],
                (c * c - d * d) / (c * c + d * d), 1e-12);
}

TEST(ProductState, WaveFunctionIsNotUnique) {
    const Eigen::VectorXd q_a = product_state_wavefunction(1, 1, 1, 1).wavefunction();
    const Eigen::VectorXd q_b = product_state_wavefunction(1, -1, 1, -1).wavefunction();
    EXPECT_GT((q_a - q_b).lpNorm<Eigen::Infinity>(), 0.1);
    const Eigen::VectorXd p_a = product_state_wavefunction(1, 1, 1, 1).distribution().p;
    const Eigen::VectorXd p_b = product_state_wavefunction(1, -1, 1, -1).distribution().p;
    EXPECT_LT((p_a - p_b).lpNorm<Eigen::Infinity>(), 1e-15);
}

TEST(Rotation, UpTargetGivesIdentity) {
    const Eigen::MatrixXd o = single_qubit_rotation_o(Eigen::Vector3d(0.0, 0.0, 1.0));
    EXPECT_LT((o - Eigen::MatrixXd::Identity(8, 8)).lpNorm<Eigen::Infinity>(), 1e-14);
}

TEST(Rotation, ReachesArbitraryPureTargets) {
    const Eigen::VectorXd q0 = one_qubit_reference_wavefunction();
    EXPECT_NEAR(q0.squaredNorm(), 1.0, 1e-14);
    EXPECT_LT((detail::extract_from_wavefunction(q0) - Eigen::Vector3d(0, 0, 1))
                  .lpNorm<Eigen::Infinity>(),
              1e-14);
    std::mt19937 rng(41);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Eigen::Vector3d> targets = {
        Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(1, 1, 1).normalized()};
    for (int trial = 0; trial < 10; ++trial) {
        targets.push_back(Eigen::Vector3d(normal(rng), normal(rng), normal(rng)).normalized());
    }
    for (const auto& rho : targets) {
        const Eigen::MatrixXd o = single_qubit_rotation_o(rho);
        EXPECT_LT((o.transpose() * o - Eigen::MatrixXd::Identity(8, 8))
                      .lpNorm<Eigen::Infinity>(),
                  1e-12);
        const Eigen::Vector3d extracted = detail::extract_from_wavefunction(o * q0);
        EXPECT_LT((extracted - rho).lpNorm<Eigen::Infinity>(), 1e-10) << rho.transpose();
    }
    EXPECT_THROW(static_cast<void>(single_qubit_rotation_o(Eigen::Vector3d(0.5, 0.0, 0.0))),
                 std::invalid_argument);
}

TEST(Nonlinearity, FixedRotationCannotImplementTheGateEverywhere) {
    const NonlinearityReport report = nonlinearity_witness();
    EXPECT_TRUE(report.flips_s3_eigenstates);
    EXPECT_NEAR(report.rho2_before, 1.0, 1e-12);
    EXPECT_NEAR(report.rho2_after, 1.0, 1e-12);
    EXPECT_NEAR(report.rho2_required, -1.0, 1e-12);
    EXPECT_TRUE(report.witnesses_nonlinearity);
    EXPECT_EQ(report.max_commutator_diagonal, 0.0);
}

}  // namespace
}  // namespace isq
