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
#include <benchmark/benchmark.h>

#include <numbers>

#include <isq/chain.hpp>
#include <isq/circuit.hpp>
#include <isq/classical_ops.hpp>
#include <isq/continuous.hpp>
#include <isq/gates.hpp>
#include <isq/maps.hpp>
#include <isq/pauli.hpp>
#include <isq/qcond.hpp>

namespace {

void BM_RhoFromCoefficients(benchmark::State& state) {
    const isq::PauliTensorBasis basis(2);
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(15);
    coeff[0] = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(isq::rho_from_coefficients(basis, coeff));
    }
}
BENCHMARK(BM_RhoFromCoefficients);

void BM_HadamardJumpThreeSpins(benchmark::State& state) {
    const auto h = isq::gate_realization({isq::GateName::H, {1}}, isq::RealizationMap::Direct3);
    const isq::ProbabilityDistribution dist =
        isq::realization_sample(isq::RealizationMap::Direct3, Eigen::Vector3d(0.2, -0.3, 0.4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h->apply(dist));
    }
}
BENCHMARK(BM_HadamardJumpThreeSpins);

void BM_CnotJumpFifteenSpins(benchmark::State& state) {
    const auto cnot =
        isq::gate_realization({isq::GateName::CNOT, {1, 2}}, isq::RealizationMap::Direct15);
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(15);
    coeff[2] = 1.0;
    const isq::ProbabilityDistribution dist =
        isq::realization_sample(isq::RealizationMap::Direct15, coeff);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnot->apply(dist));
    }
}
BENCHMARK(BM_CnotJumpFifteenSpins);

void BM_ExtractRhoCorrelationSixSpins(benchmark::State& state) {
    const isq::ProbabilityDistribution dist =
        isq::detail::theta_family_distribution(std::numbers::pi / 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            isq::realization_extract(isq::RealizationMap::Correlation6, dist));
    }
}
BENCHMARK(BM_ExtractRhoCorrelationSixSpins);

void BM_PositivityReport(benchmark::State& state) {
    const isq::PauliTensorBasis basis(2);
    Eigen::Vector4cd psi;
    psi << 0.0, 1.0, -1.0, 0.0;
    psi.normalize();
    const isq::QuantumDensityMatrix rho = isq::rho_from_state(basis, psi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(isq::positivity_report(rho));
    }
}
BENCHMARK(BM_PositivityReport);

void BM_ControlledGateRelationResiduals(benchmark::State& state) {
    std::vector<Eigen::Index> perm(64);
    for (Eigen::Index i = 0; i < 64; ++i) {
        perm[static_cast<std::size_t>(i)] = 63 - i;
    }
    const isq::UniqueJumpOp jump(6, perm);
    for (auto _ : state) {
        benchmark::DoNotOptimize(isq::controlled_gate_relation_residuals(jump));
    }
}
BENCHMARK(BM_ControlledGateRelationResiduals);

void BM_BellCircuitRun(benchmark::State& state) {
    const isq::CircuitProgram program = isq::parse_circuit(
        "qubits 2\nmap direct15\nstate product:+3,+3\nH 1\nCNOT 1 2\n");
    for (auto _ : state) {
        benchmark::DoNotOptimize(isq::compile_and_run(program));
    }
}
BENCHMARK(BM_BellCircuitRun);

void BM_ContinuousQuadrature(benchmark::State& state) {
    const isq::RotationInvariantModel model{Eigen::Vector3d(0.3, -0.5, 0.6), {}};
    const isq::HalfSpaceSpin spin{Eigen::Vector3d(1.0, 2.0, 2.0) / 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(isq::rotation_invariant_expectation_quadrature(model, spin));
    }
}
BENCHMARK(BM_ContinuousQuadrature);

void BM_ContinuousMonteCarlo(benchmark::State& state) {
    const isq::RotationInvariantModel model{Eigen::Vector3d(0.3, -0.5, 0.6), {}};
    const isq::HalfSpaceSpin spin{Eigen::Vector3d(1.0, 2.0, 2.0) / 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            isq::rotation_invariant_expectation_monte_carlo(model, spin, 1 << 16, 7));
    }
}
BENCHMARK(BM_ContinuousMonteCarlo);

}  // namespace

BENCHMARK_MAIN();
