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
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <isq/classical_ops.hpp>
#include <isq/gates.hpp>
#include <isq/maps.hpp>

namespace {

using isq::GateName;
using isq::GateSpec;
using isq::MarkovOp;
using isq::ProbabilityDistribution;
using isq::Realization;
using isq::RealizationMap;
using isq::SpinTransformRule;
using isq::UniqueJumpOp;

ProbabilityDistribution random_distribution(int m, std::mt19937& rng) {
    std::exponential_distribution<double> expd(1.0);
    Eigen::VectorXd p(Eigen::Index{1} << m);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        p[i] = expd(rng);
    }
    p /= p.sum();
    return ProbabilityDistribution(m, std::move(p));
}

SpinTransformRule conditional_jump_c() {
    // Spin order (s1,s2,s3) of system 1 then system 2.  When the second
    // system's first spin is down, flip the first system's spins 1 and 2;
    // when the first system's third spin is down, flip the second system's
    // spins 2 and 3.
    SpinTransformRule rule{6, {}};
    rule.actions = {
        {1, -1, 4, -1}, {2, -1, 4, -1}, {3, 1, 0, 0},
        {4, 1, 0, 0},   {5, -1, 3, -1}, {6, -1, 3, -1},
    };
    return rule;
}

TEST(RuleToPermutation, HadamardExchange) {
    SpinTransformRule rule{3, {{3, 1}, {2, -1}, {1, 1}}};
    const auto jump = isq::rule_to_permutation(rule);
    // States pair up as 1<->3, 2<->7, 4<->5, 6<->8 (1-based).
    const std::vector<Eigen::Index> expected = {2, 6, 0, 4, 3, 7, 1, 5};
    EXPECT_EQ(jump.permutation(), expected);
    const auto catalog = isq::gate_realization({GateName::H, {1}}, RealizationMap::Direct3);
    ASSERT_TRUE(catalog.has_value());
    EXPECT_EQ(std::get<UniqueJumpOp>(catalog->op).permutation(), expected);
}

TEST(RuleToPermutation, IdentityAndErrors) {
    SpinTransformRule rule{2, {{1, 1}, {2, 1}}};
    const auto jump = isq::rule_to_permutation(rule);
    for (Eigen::Index tau = 0; tau < 4; ++tau) {
        EXPECT_EQ(jump.image(tau), tau);
    }
    // Two targets reading the same source is not bijective.
    SpinTransformRule bad{2, {{1, 1}, {1, 1}}};
    EXPECT_THROW(static_cast<void>(isq::rule_to_permutation(bad)), std::invalid_argument);
}

TEST(RuleToPermutation, ConditionalJumpBijective) {
    const auto jump = isq::rule_to_permutation(conditional_jump_c());
    // The conditions read spins the rule never changes, so C is an involution.
    const auto twice = jump.then(jump);
    for (Eigen::Index tau = 0; tau < 64; ++tau) {
        EXPECT_EQ(twice.image(tau), tau);
    }
}

TEST(UniqueJump, OrthogonalMatrix) {
    std::mt19937 rng(31);
    const auto jump = isq::rule_to_permutation(conditional_jump_c());
    const Eigen::MatrixXd s = jump.matrix();
    EXPECT_LE((s.transpose() * s - Eigen::MatrixXd::Identity(64, 64)).lpNorm<Eigen::Infinity>(),
              0.0);
    // Inverse permutation undoes the map on a random distribution.
    const auto dist = random_distribution(6, rng);
    const auto back = jump.inverse().apply(jump.apply(dist));
    EXPECT_LE((back.p - dist.p).lpNorm<Eigen::Infinity>(), 1e-15);
}

TEST(ApplyMarkov, ProjectorMatrixSplitsDelta) {
    Eigen::MatrixXd sp(4, 4);
    sp << 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0;
    sp *= 0.5;
    const MarkovOp op(2, sp);
    const auto out = isq::apply_markov(op, ProbabilityDistribution::delta(2, 1));
    Eigen::VectorXd expected(4);
    expected << 0.5, 0.0, 0.0, 0.5;
    EXPECT_LE((out.p - expected).lpNorm<Eigen::Infinity>(), 1e-15);
    // Identity leaves distributions unchanged.
    const MarkovOp id(2, Eigen::MatrixXd::Identity(4, 4));
    std::mt19937 rng(5);
    const auto dist = random_distribution(2, rng);
    EXPECT_LE((isq::apply_markov(id, dist).p - dist.p).lpNorm<Eigen::Infinity>(), 1e-15);
}

TEST(TGateSignedMap, StructuralProperties) {
    const MarkovOp op = isq::t_gate_signed_map();
    EXPECT_TRUE(op.allows_signed);
    EXPECT_LT(op.W.minCoeff(), -1e-3);
    for (int col = 0; col < 8; ++col) {
        EXPECT_NEAR(op.W.col(col).sum(), 1.0, 1e-12);
    }
    // The uniform distribution is a fixed point.
    const auto uniform = ProbabilityDistribution::uniform(3);
    EXPECT_LE((isq::apply_markov(op, uniform).p - uniform.p).lpNorm<Eigen::Infinity>(), 1e-15);
    // Eight applications are the identity exactly; no fewer suffice.
    const auto report = isq::spectrum_period(op, 16);
    ASSERT_TRUE(report.period.has_value());
    EXPECT_EQ(*report.period, 8);
}

TEST(TGateSignedMap, InducesQuarterTurnOnCoefficients) {
    const MarkovOp op = isq::t_gate_signed_map();
    const double is2 = 1.0 / std::numbers::sqrt2;
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const auto dist = random_distribution(3, rng);
        const Eigen::VectorXd before = isq::realization_extract(RealizationMap::Signed3, dist);
        const Eigen::VectorXd after =
            isq::realization_extract_raw(RealizationMap::Signed3, isq::apply_markov_raw(op, dist.p));
        EXPECT_NEAR(after[0], is2 * (before[0] - before[1]), 1e-12);
        EXPECT_NEAR(after[1], is2 * (before[0] + before[1]), 1e-12);
        EXPECT_NEAR(after[2], before[2], 1e-12);
    }
    // The pure state along the first axis rotates onto the diagonal.
    Eigen::VectorXd pure(3);
    pure << 1.0, 0.0, 0.0;
    const auto dist = isq::realization_sample(RealizationMap::Signed3, pure);
    const Eigen::VectorXd rotated =
        isq::realization_extract_raw(RealizationMap::Signed3, isq::apply_markov_raw(op, dist.p));
    EXPECT_NEAR(rotated[0], is2, 1e-12);
    EXPECT_NEAR(rotated[1], is2, 1e-12);
    EXPECT_NEAR(rotated[2], 0.0, 1e-12);
}

TEST(TGateSignedMap, ValidatedApplicationDomain) {
    const MarkovOp op = isq::t_gate_signed_map();
    // Mildly mixed states stay inside the simplex...
    Eigen::VectorXd small(3);
    small << 0.3, 0.0, 0.1;
    const auto mixed = isq::realization_sample(RealizationMap::Signed3, small);
    EXPECT_NO_THROW(static_cast<void>(isq::apply_markov(op, mixed)));
    // ... but the independent-spin realization of the pure state does not.
    Eigen::VectorXd pure(3);
    pure << 1.0, 0.0, 0.0;
    const auto edge = isq::realization_sample(RealizationMap::Signed3, pure);
    EXPECT_THROW(static_cast<void>(isq::apply_markov(op, edge)), std::domain_error);
}

TEST(GateRealization, Direct3CatalogMatchesUnitaries) {
    for (const GateName g :
         {GateName::H, GateName::U12, GateName::U31, GateName::UZ, GateName::UY, GateName::UX}) {
        const auto real = isq::gate_realization({g, {1}}, RealizationMap::Direct3);
        ASSERT_TRUE(real.has_value()) << isq::gate_name_string(g);
        const auto induced = isq::induced_coefficient_map(*real, RealizationMap::Direct3);
        EXPECT_TRUE(induced.closed) << isq::gate_name_string(g);
        const Eigen::Matrix3d expected = isq::single_qubit_coefficient_rotation(g);
        EXPECT_LE((induced.b - expected).lpNorm<Eigen::Infinity>(), 1e-9)
            << isq::gate_name_string(g);
    }
    const auto conj = isq::gate_realization({GateName::CONJ, {}}, RealizationMap::Direct3);
    ASSERT_TRUE(conj.has_value());
    const auto induced = isq::induced_coefficient_map(*conj, RealizationMap::Direct3);
    EXPECT_TRUE(induced.closed);
    EXPECT_NEAR(induced.b(1, 1), -1.0, 1e-9);
    // Non-exchange rotations have no unique-jump realization on three spins.
    EXPECT_FALSE(isq::gate_realization({GateName::T, {1}}, RealizationMap::Direct3).has_value());
    EXPECT_FALSE(
        isq::gate_realization({GateName::PI4_31, {1}}, RealizationMap::Direct3).has_value());
    EXPECT_FALSE(
        isq::gate_realization({GateName::CNOT, {1, 2}}, RealizationMap::Direct3).has_value());
}

TEST(GateRealization, Direct15CnotMatchesConjugation) {
    const auto real = isq::gate_realization({GateName::CNOT, {1, 2}}, RealizationMap::Direct15);
    ASSERT_TRUE(real.has_value());
    const isq::PauliTensorBasis basis(2);
    std::mt19937 rng(13);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        isq::CMatrix a(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                a(i, j) = isq::Complex(normal(rng), normal(rng));
            }
        }
        isq::CMatrix m = a * a.adjoint();
        m /= m.trace();
        const auto rho = isq::rho_from_matrix(basis, m);
        const auto dist = isq::realization_sample(RealizationMap::Direct15, rho.coefficients);
        const auto out = real->apply(dist);
        const Eigen::VectorXd extracted =
            isq::realization_extract(RealizationMap::Direct15, out);
        const auto expected = isq::apply_unitary(basis, rho, {GateName::CNOT, {1, 2}});
        EXPECT_LE((extracted - expected.coefficients).lpNorm<Eigen::Infinity>(), 1e-12);
    }
    // The sign in the (1,3) <-> (2,2) exchange is the important one.
    const auto induced = isq::induced_coefficient_map(*real, RealizationMap::Direct15);
    EXPECT_TRUE(induced.closed);
    EXPECT_NEAR(induced.b(basis.flat_index({2, 2}), basis.flat_index({1, 3})), -1.0, 1e-9);
    EXPECT_NEAR(induced.b(basis.flat_index({1, 3}), basis.flat_index({2, 2})), -1.0, 1e-9);
}

TEST(GateRealization, Direct15SwapIsIndexTransposition) {
    const auto real = isq::gate_realization({GateName::SWAP, {1, 2}}, RealizationMap::Direct15);
    ASSERT_TRUE(real.has_value());
    const auto& jump = std::get<UniqueJumpOp>(real->op);
    const auto twice = jump.then(jump);
    for (Eigen::Index tau = 0; tau < (1 << 15); ++tau) {
        ASSERT_EQ(twice.image(tau), tau);
    }
    const isq::PauliTensorBasis basis(2);
    const auto induced = isq::induced_coefficient_map(*real, RealizationMap::Direct15);
    EXPECT_TRUE(induced.closed);
    for (int mu = 0; mu <= 3; ++mu) {
        for (int nu = 0; nu <= 3; ++nu) {
            if (mu == 0 && nu == 0) {
                continue;
            }
            EXPECT_NEAR(induced.b(basis.flat_index({nu, mu}), basis.flat_index({mu, nu})), 1.0,
                        1e-9);
        }
    }
}

TEST(GateRealization, Correlation6SingleQubitAndSwap) {
    const isq::PauliTensorBasis basis(2);
    const auto h1 = isq::gate_realization({GateName::H, {1}}, RealizationMap::Correlation6);
    ASSERT_TRUE(h1.has_value());
    const auto induced = isq::induced_coefficient_map(*h1, RealizationMap::Correlation6);
    EXPECT_TRUE(induced.closed);
    // Compare against unitary conjugation on sampled product states.
    const auto map = isq::BitQuantumMap::correlation(2);
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(15);
    coeff[basis.flat_index({1, 0})] = 0.4;
    coeff[basis.flat_index({0, 3})] = -0.5;
    coeff[basis.flat_index({1, 3})] = -0.2;
    const auto rho = isq::rho_from_coefficients(basis, coeff);
    const auto dist = isq::sample_quantum_distribution(map, rho);
    const auto out = h1->apply(dist);
    const auto expected = isq::apply_unitary(basis, rho, {GateName::H, {1}});
    EXPECT_LE((isq::extract_rho(map, out).coefficients - expected.coefficients)
                  .lpNorm<Eigen::Infinity>(),
              1e-12);
    const auto swap = isq::gate_realization({GateName::SWAP, {1, 2}}, RealizationMap::Correlation6);
    ASSERT_TRUE(swap.has_value());
    const auto induced_swap = isq::induced_coefficient_map(*swap, RealizationMap::Correlation6);
    EXPECT_TRUE(induced_swap.closed);
    EXPECT_NEAR(induced_swap.b(basis.flat_index({3, 1}), basis.flat_index({1, 3})), 1.0, 1e-9);
    // No unique-jump CNOT is known on the six-spin correlation space.
    EXPECT_FALSE(
        isq::gate_realization({GateName::CNOT, {1, 2}}, RealizationMap::Correlation6).has_value());
}

TEST(GateRealization, Extended4QuarterTurn) {
    const auto pi4 = isq::gate_realization({GateName::PI4_31, {1}}, RealizationMap::Extended4);
    ASSERT_TRUE(pi4.has_value());
    const double is2 = 1.0 / std::numbers::sqrt2;
    const auto induced = isq::induced_coefficient_map(*pi4, RealizationMap::Extended4);
    EXPECT_TRUE(induced.closed);
    Eigen::Matrix2d expected;
    expected << is2, -is2, is2, is2;
    EXPECT_LE((induced.b - expected).lpNorm<Eigen::Infinity>(), 1e-9);
    // Two quarter-turn jumps equal the half-turn jump; the cycle has period 8.
    const auto u31 = isq::gate_realization({GateName::U31, {1}}, RealizationMap::Extended4);
    ASSERT_TRUE(u31.has_value());
    const auto& p = std::get<UniqueJumpOp>(pi4->op);
    EXPECT_TRUE(p.then(p) == std::get<UniqueJumpOp>(u31->op));
    auto power = p;
    int period = 1;
    while (!(power == isq::rule_to_permutation(isq::detail::identity_rule(4))) && period < 20) {
        power = power.then(p);
        ++period;
    }
    EXPECT_EQ(period, 8);
}

TEST(GateRealization, Icosa6ReflectionsAndFifthTurn) {
    for (const GateName g : {GateName::UX, GateName::UY, GateName::UZ}) {
        const auto real = isq::gate_realization({g, {1}}, RealizationMap::Icosa6);
        ASSERT_TRUE(real.has_value()) << isq::gate_name_string(g);
        const auto induced = isq::induced_coefficient_map(*real, RealizationMap::Icosa6);
        EXPECT_TRUE(induced.closed) << isq::gate_name_string(g);
        const Eigen::Matrix3d expected = isq::single_qubit_coefficient_rotation(g);
        EXPECT_LE((induced.b - expected).lpNorm<Eigen::Infinity>(), 1e-9)
            << isq::gate_name_string(g);
    }
    // The pi/2 rotations are not available on the icosahedron spins.
    EXPECT_FALSE(isq::gate_realization({GateName::U12, {1}}, RealizationMap::Icosa6).has_value());
    EXPECT_FALSE(isq::gate_realization({GateName::H, {1}}, RealizationMap::Icosa6).has_value());
    // The 2 pi / 5 rotation is, with period five and the right induced map.
    const auto r5 = isq::icosahedral_r5_rotation();
    auto power = r5;
    for (int i = 1; i < 5; ++i) {
        power = power.then(r5);
    }
    for (Eigen::Index tau = 0; tau < 64; ++tau) {
        ASSERT_EQ(power.image(tau), tau);
    }
    const auto induced = isq::induced_coefficient_map(Realization{r5}, RealizationMap::Icosa6);
    EXPECT_TRUE(induced.closed);
    EXPECT_LE((induced.b - isq::icosahedral_r5_matrix()).lpNorm<Eigen::Infinity>(), 1e-9);
}

TEST(InducedMap, ConditionalFlipNotClosed) {
    // Flipping s2 only when s1 is down leaks environment information into
    // the coefficients.
    SpinTransformRule rule{3, {{1, 1}, {2, -1, 1, -1}, {3, 1}}};
    const Realization real{isq::rule_to_permutation(rule)};
    const auto induced = isq::induced_coefficient_map(real, RealizationMap::Direct3);
    EXPECT_FALSE(induced.closed);
}

TEST(ConditionalJumpC, ObservableMapHoldsForAllDistributions) {
    const Realization c{isq::rule_to_permutation(conditional_jump_c())};
    const isq::PauliTensorBasis basis(2);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto dist = random_distribution(6, rng);
        const auto out = c.apply(dist);
        const Eigen::VectorXd before =
            isq::realization_extract(RealizationMap::Correlation6, dist);
        const Eigen::VectorXd after = isq::realization_extract(RealizationMap::Correlation6, out);
        auto idx = [&](int mu, int nu) { return basis.flat_index({mu, nu}); };
        // Exchanged pairs.
        EXPECT_NEAR(after[idx(1, 0)], before[idx(1, 1)], 1e-12);
        EXPECT_NEAR(after[idx(1, 1)], before[idx(1, 0)], 1e-12);
        EXPECT_NEAR(after[idx(2, 0)], before[idx(2, 1)], 1e-12);
        EXPECT_NEAR(after[idx(2, 1)], before[idx(2, 0)], 1e-12);
        EXPECT_NEAR(after[idx(0, 2)], before[idx(3, 2)], 1e-12);
        EXPECT_NEAR(after[idx(3, 2)], before[idx(0, 2)], 1e-12);
        EXPECT_NEAR(after[idx(0, 3)], before[idx(3, 3)], 1e-12);
        EXPECT_NEAR(after[idx(3, 3)], before[idx(0, 3)], 1e-12);
        // Invariants.
        EXPECT_NEAR(after[idx(3, 0)], before[idx(3, 0)], 1e-12);
        EXPECT_NEAR(after[idx(0, 1)], before[idx(0, 1)], 1e-12);
        EXPECT_NEAR(after[idx(3, 1)], before[idx(3, 1)], 1e-12);
    }
}

TEST(ConditionalJumpC, CounterexampleDistributionDefeatsCnot) {
    // Sixteen configurations at 1/8: both third spins pinned up and the
    // second system's second spin equal to the product of the two first
    // spins; all one- and two-point functions of the four involved spins
    // vanish while the three-point function is one.
    Eigen::VectorXd p = Eigen::VectorXd::Zero(64);
    for (int tau = 0; tau < 64; ++tau) {
        const auto cfg = isq::config_from_index(tau, 6);
        const int s11 = cfg.spin(1);
        const int s21 = cfg.spin(2);
        const int s12 = cfg.spin(4);
        const int s22 = cfg.spin(5);
        if (cfg.spin(3) == 1 && cfg.spin(6) == 1 && s22 == s11 * s12) {
            (void)s21;
            p[tau] = 1.0 / 8.0;
        }
    }
    const ProbabilityDistribution dist(6, p);
    EXPECT_NEAR(isq::expectation(dist, {1, 4, 5}), 1.0, 1e-14);
    for (const int gamma : {1, 2, 4, 5}) {
        EXPECT_NEAR(isq::expectation(dist, {gamma}), 0.0, 1e-14);
    }
    for (const int a : {1, 2}) {
        for (const int b : {4, 5}) {
            EXPECT_NEAR(isq::expectation(dist, {a, b}), 0.0, 1e-14);
        }
    }
    // CNOT would leave this state unchanged (only the pinned third-axis
    // coefficients are nonzero), but the conditional jump produces a unit
    // cross-correlation.
    const Realization c{isq::rule_to_permutation(conditional_jump_c())};
    const auto out = c.apply(dist);
    EXPECT_NEAR(std::abs(isq::expectation(out, {1, 5})), 1.0, 1e-14);
}

TEST(NoGo, CatalogClosureContainsNoTGateRotation) {
    // Group closure of the three-spin unique-jump catalog.
    std::vector<UniqueJumpOp> closure;
    std::vector<UniqueJumpOp> generators;
    for (const GateName g : {GateName::H, GateName::U12, GateName::U31, GateName::UZ, GateName::UY,
                             GateName::UX}) {
        generators.push_back(
            std::get<UniqueJumpOp>(isq::gate_realization({g, {1}}, RealizationMap::Direct3)->op));
    }
    generators.push_back(
        std::get<UniqueJumpOp>(isq::gate_realization({GateName::CONJ, {}}, RealizationMap::Direct3)->op));
    closure.push_back(isq::rule_to_permutation(isq::detail::identity_rule(3)));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t current = closure.size();
        for (std::size_t i = 0; i < current; ++i) {
            for (const auto& g : generators) {
                const auto cand = closure[i].then(g);
                if (std::find(closure.begin(), closure.end(), cand) == closure.end()) {
                    closure.push_back(cand);
                    grew = true;
                }
            }
        }
        ASSERT_LE(closure.size(), 500u);
    }
    // The closure is the finite signed-permutation group.
    EXPECT_EQ(closure.size(), 48u);
    // Target rotation: Hadamard followed by the pi/4 phase gate.
    const isq::CMatrix ht = isq::gate_matrix(GateName::H) * isq::gate_matrix(GateName::T);
    Eigen::Matrix3d target;
    for (int k = 1; k <= 3; ++k) {
        for (int j = 1; j <= 3; ++j) {
            target(k - 1, j - 1) =
                0.5 * (isq::pauli_matrix(k) * ht * isq::pauli_matrix(j) * ht.adjoint())
                          .trace()
                          .real();
        }
    }
    double best = 1e9;
    for (const auto& element : closure) {
        const auto induced = isq::induced_coefficient_map(Realization{element},
                                                          RealizationMap::Direct3);
        ASSERT_TRUE(induced.closed);
        best = std::min(best, (induced.b - target).lpNorm<Eigen::Infinity>());
    }
    EXPECT_GE(best, 1e-3);
}

TEST(SpectrumPeriod, WorkedMatrices) {
    Eigen::MatrixXd sp(4, 4);
    sp << 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0;
    sp *= 0.5;
    const auto rep_sp = isq::spectrum_period(MarkovOp(2, sp), 64);
    std::vector<double> evals;
    for (Eigen::Index i = 0; i < 4; ++i) {
        EXPECT_NEAR(rep_sp.eigenvalues[i].imag(), 0.0, 1e-10);
        evals.push_back(rep_sp.eigenvalues[i].real());
    }
    std::sort(evals.begin(), evals.end());
    EXPECT_NEAR(evals[0], -1.0, 1e-10);
    EXPECT_NEAR(evals[1], 0.0, 1e-10);
    EXPECT_NEAR(evals[2], 0.0, 1e-10);
    EXPECT_NEAR(evals[3], 1.0, 1e-10);
    EXPECT_FALSE(rep_sp.period.has_value());
    EXPECT_EQ(rep_sp.leading_indices.size(), 2u);

    const double u = 0.3;
    const double w = 1.0 - u;
    Eigen::MatrixXd su(4, 4);
    su << 0, w, u, 0, u, 0, 0, w, w, 0, 0, u, 0, u, w, 0;
    const auto rep_su = isq::spectrum_period(MarkovOp(2, su), 64);
    std::vector<double> mods;
    double max_imag = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        mods.push_back(std::abs(rep_su.eigenvalues[i]));
        max_imag = std::max(max_imag, std::abs(rep_su.eigenvalues[i].imag()));
    }
    std::sort(mods.begin(), mods.end());
    EXPECT_NEAR(mods[0], 0.4, 1e-10);
    EXPECT_NEAR(mods[1], 0.4, 1e-10);
    EXPECT_NEAR(mods[2], 1.0, 1e-10);
    EXPECT_NEAR(mods[3], 1.0, 1e-10);
    EXPECT_NEAR(max_imag, 0.4, 1e-10);

    Eigen::MatrixXd z22(4, 4);
    z22 << 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1;
    z22 /= 3.0;
    const auto rep_z = isq::spectrum_period(MarkovOp(2, z22), 64);
    std::vector<double> zev;
    for (Eigen::Index i = 0; i < 4; ++i) {
        EXPECT_NEAR(rep_z.eigenvalues[i].imag(), 0.0, 1e-10);
        zev.push_back(rep_z.eigenvalues[i].real());
    }
    std::sort(zev.begin(), zev.end());
    EXPECT_NEAR(zev[0], -1.0 / 3.0, 1e-10);
    EXPECT_NEAR(zev[1], 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(zev[2], 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(zev[3], 1.0, 1e-10);
    EXPECT_FALSE(rep_z.period.has_value());
}

TEST(SpectrumPeriod, LeadingEigenvaluesBounded) {
    // Random column-stochastic matrices never exceed unit spectral radius.
    std::mt19937 rng(77);
    std::exponential_distribution<double> expd(1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd w(8, 8);
        for (int j = 0; j < 8; ++j) {
            double sum = 0.0;
            for (int i = 0; i < 8; ++i) {
                w(i, j) = expd(rng);
                sum += w(i, j);
            }
            w.col(j) /= sum;
        }
        const auto rep = isq::spectrum_period(MarkovOp(3, w), 1);
        for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
            EXPECT_LE(std::abs(rep.eigenvalues[i]), 1.0 + 1e-10);
        }
    }
}

}  // namespace
