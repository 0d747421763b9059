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
#pragma once
/**
 * @file chain.hpp
 * Layered spin chains as computing devices: step evolution operators built
 * from layer-to-layer interactions, evolution of classical wave functions and
 * classical density matrices, loss of memory, quantum-state preparation by
 * projector steps, reducibility to plain probability maps, subsystem closure,
 * no-cloning, and algebraic no-go checks for a two-qubit controlled gate.
 */
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "classical_ops.hpp"
#include "gates.hpp"
#include "maps.hpp"
#include "pauli.hpp"
#include "spin.hpp"

namespace isq {

// ---------------------------------------------------------------------------
// Interaction terms between neighboring layers.

/// Explicit matrix of layer-to-layer couplings; the transfer matrix is the
/// elementwise exponential exp(-m).
struct ExplicitMatrixTerm {
    Eigen::MatrixXd m;
};

/// One signed product of spins: primed indices refer to the next layer,
/// unprimed ones to the current layer.
struct SpinProductCoupling {
    std::vector<int> primed;
    std::vector<int> unprimed;
    double coeff = 1.0;
};

/**
 * Interaction of the form -beta * (sum of signed spin products - offset).
 * With beta_infinite the zero-cost set alone survives: the step operator is
 * the indicator of the configurations maximizing the product sum, which must
 * reach `offset` in every column (otherwise the term is rejected).
 */
struct SpinCouplingTerm {
    int M = 0;
    std::vector<SpinProductCoupling> couplings;
    double beta = 1.0;
    bool beta_infinite = true;
    double offset = 0.0;
};

/// Restricted Boltzmann layer: couplings a to the next layer's spins, b to
/// the current layer's, and a full bilinear w between them.
struct BoltzmannTerm {
    Eigen::VectorXd a;
    Eigen::VectorXd b;
    Eigen::MatrixXd w;
};

using InteractionTerm = std::variant<ExplicitMatrixTerm, SpinCouplingTerm, BoltzmannTerm>;

/// One computational step: a real 2^M x 2^M matrix normalized to unit
/// spectral radius.  Permutation steps are tagged for exact handling.
struct StepEvolutionOperator {
    int M = 0;
    Eigen::MatrixXd S;
    bool is_permutation = false;

    static StepEvolutionOperator from_jump(const UniqueJumpOp& jump) {
        return {jump.M(), jump.matrix(), true};
    }
};

namespace detail {

/// Sum of the signed spin products for next-layer configuration tau_next and
/// current-layer configuration tau.
inline double coupling_energy(const SpinCouplingTerm& term, Eigen::Index tau_next,
                              Eigen::Index tau) {
    double total = 0.0;
    for (const auto& c : term.couplings) {
        double prod = c.coeff;
        for (const int gamma : c.primed) {
            prod *= spin_value(tau_next, term.M, gamma);
        }
        for (const int gamma : c.unprimed) {
            prod *= spin_value(tau, term.M, gamma);
        }
        total += prod;
    }
    return total;
}

inline double spectral_radius(const Eigen::MatrixXd& s) {
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(s, /*computeEigenvectors=*/false);
    double radius = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
    }
    return radius;
}

inline bool matrix_is_permutation(const Eigen::MatrixXd& s) {
    for (Eigen::Index col = 0; col < s.cols(); ++col) {
        int ones = 0;
        for (Eigen::Index row = 0; row < s.rows(); ++row) {
            if (std::abs(s(row, col) - 1.0) < 1e-12) {
                ++ones;
            } else if (std::abs(s(row, col)) > 1e-12) {
                return false;
            }
        }
        if (ones != 1) {
            return false;
        }
    }
    for (Eigen::Index row = 0; row < s.rows(); ++row) {
        if (std::abs(s.row(row).sum() - 1.0) > 1e-12) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * Builds the step evolution operator for one layer.  The transfer matrix is
 * the elementwise exponential of the couplings, normalized to unit spectral
 * radius; the infinite-coupling limit of a SpinCouplingTerm is evaluated
 * symbolically as the indicator of the cost minimizers, never by
 * exponentiating a large number.
 */
inline StepEvolutionOperator step_from_interaction(const InteractionTerm& term, int m) {
    const Eigen::Index n = Eigen::Index{1} << m;
    Eigen::MatrixXd s(n, n);
    if (const auto* em = std::get_if<ExplicitMatrixTerm>(&term)) {
        if (em->m.rows() != n || em->m.cols() != n) {
            throw std::invalid_argument("step_from_interaction: matrix size mismatch");
        }
        s = (-em->m.array()).exp().matrix();
    } else if (const auto* sc = std::get_if<SpinCouplingTerm>(&term)) {
        if (sc->M != m) {
            throw std::invalid_argument("step_from_interaction: spin count mismatch");
        }
        Eigen::MatrixXd energy(n, n);
        for (Eigen::Index tau = 0; tau < n; ++tau) {
            for (Eigen::Index next = 0; next < n; ++next) {
                energy(next, tau) = detail::coupling_energy(*sc, next, tau);
            }
        }
        if (sc->beta_infinite) {
            const double top = energy.maxCoeff();
            if (std::abs(top - sc->offset) > 1e-9) {
                throw std::invalid_argument(
                    "step_from_interaction: offset does not match the minimal cost");
            }
            for (Eigen::Index tau = 0; tau < n; ++tau) {
                const double col_top = energy.col(tau).maxCoeff();
                if (std::abs(col_top - top) > 1e-9) {
                    throw std::invalid_argument(
                        "step_from_interaction: a configuration has no zero-cost successor");
                }
                for (Eigen::Index next = 0; next < n; ++next) {
                    s(next, tau) = std::abs(energy(next, tau) - top) < 1e-9 ? 1.0 : 0.0;
                }
            }
        } else {
            if (sc->beta <= 0.0) {
                throw std::invalid_argument("step_from_interaction: beta must be positive");
            }
            s = (sc->beta * (energy.array() - sc->offset)).exp().matrix();
        }
    } else {
        const auto& bm = std::get<BoltzmannTerm>(term);
        if (bm.a.size() != m || bm.b.size() != m || bm.w.rows() != m || bm.w.cols() != m) {
            throw std::invalid_argument("step_from_interaction: Boltzmann size mismatch");
        }
        for (Eigen::Index tau = 0; tau < n; ++tau) {
            Eigen::VectorXd cur(m);
            for (int g = 1; g <= m; ++g) {
                cur[g - 1] = spin_value(tau, m, g);
            }
            for (Eigen::Index next = 0; next < n; ++next) {
                Eigen::VectorXd nxt(m);
                for (int g = 1; g <= m; ++g) {
                    nxt[g - 1] = spin_value(next, m, g);
                }
                s(next, tau) =
                    std::exp(bm.a.dot(nxt) + bm.b.dot(cur) + nxt.dot(bm.w * cur));
            }
        }
    }
    const double radius = detail::spectral_radius(s);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("step_from_interaction: term is not normalizable");
    }
    s /= radius;
    const bool perm = detail::matrix_is_permutation(s);
    return {m, std::move(s), perm};
}

/// Layer-to-layer coupling realizing the half-turn exchange s1 <-> s3 with a
/// sign flip of s2 on the first three-spin block, identity on the second.
inline SpinCouplingTerm hadamard_interaction() {
    SpinCouplingTerm term{6, {}, 1.0, true, 6.0};
    term.couplings = {
        {{1}, {3}, 1.0}, {{3}, {1}, 1.0}, {{2}, {2}, -1.0},
        {{4}, {4}, 1.0}, {{5}, {5}, 1.0}, {{6}, {6}, 1.0},
    };
    return term;
}

/// Layer-to-layer coupling exchanging the two three-spin blocks.
inline SpinCouplingTerm swap_interaction() {
    SpinCouplingTerm term{6, {}, 1.0, true, 6.0};
    for (int k = 1; k <= 3; ++k) {
        term.couplings.push_back({{k}, {3 + k}, 1.0});
        term.couplings.push_back({{3 + k}, {k}, 1.0});
    }
    return term;
}

/**
 * Frustrated fifteen-term coupling on six spins.  Not all terms can reach
 * their maximum simultaneously; the offset states the attainable maximum.
 * With gamma in {0, 1} the zero-cost set is the conditional double-flip
 * permutation (offset 10 + delta); with gamma = 2, delta = 0 each input
 * configuration has three equally probable successors (offset 10).
 */
inline SpinCouplingTerm frustrated_interaction(double gamma, double delta, double offset) {
    SpinCouplingTerm term{6, {}, 1.0, true, offset};
    term.couplings = {
        {{3, 6}, {6}, 1.0},    {{6}, {3, 6}, 1.0},
        {{3, 5}, {5}, 1.0},    {{5}, {3, 5}, 1.0},
        {{1, 4}, {1}, 1.0},    {{1}, {1, 4}, 1.0},
        {{2, 4}, {2}, 1.0},    {{2}, {2, 4}, 1.0},
        {{1, 5}, {2, 6}, gamma},  {{2, 6}, {1, 5}, gamma},
        {{2, 5}, {1, 6}, -gamma}, {{1, 6}, {2, 5}, -gamma},
        {{3}, {3}, 1.0},       {{4}, {4}, 1.0},
        {{3, 4}, {3, 4}, delta},
    };
    return term;
}

// ---------------------------------------------------------------------------
// Worked four- and eight-state operators.

/// Projector-plus-exchange operator: erases the memory held in two of the
/// four wave-function directions in a single step.
inline Eigen::MatrixXd sp_matrix() {
    Eigen::MatrixXd s(4, 4);
    s << 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0;
    return 0.5 * s;
}

/// Smooth interpolation; the subleading eigenvalues +-i(1-2u) suppress two
/// directions by (1-2u) per step, reaching sp_matrix at u = 1/2.
inline Eigen::MatrixXd su_matrix(double u) {
    if (u < 0.0 || u > 1.0) {
        throw std::invalid_argument("su_matrix: u must lie in [0, 1]");
    }
    const double w = 1.0 - u;
    Eigen::MatrixXd s(4, 4);
    s << 0, w, u, 0, u, 0, 0, w, w, 0, 0, u, 0, u, w, 0;
    return s;
}

/// Rapid equilibrator with eigenvalues 1, 1/3, 1/3, -1/3: any memory of the
/// boundary decays geometrically toward equipartition.
inline Eigen::MatrixXd z22_matrix() {
    Eigen::MatrixXd s(4, 4);
    s << 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1;
    return s / 3.0;
}

/// Block embedding of sp_matrix for three spins: the first spin is
/// untouched, the (s2, s3) sector is projected.
inline Eigen::MatrixXd hat_sp_matrix() {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(8, 8);
    s.block(0, 0, 4, 4) = sp_matrix();
    s.block(4, 4, 4, 4) = sp_matrix();
    return s;
}

// ---------------------------------------------------------------------------
// Chains and evolution.

/// An ordered chain of computational steps with a boundary condition: either
/// a wave-function pair (forward function at the first layer, conjugate
/// function at the last layer) or an initial classical density matrix.
struct Chain {
    int M = 0;
    std::vector<StepEvolutionOperator> steps;
    std::variant<WaveFunctionPair, ClassicalDensityMatrix> boundary;
};

/**
 * Per-layer wave functions for a product boundary: the forward function is
 * propagated from the first layer, the conjugate one backward from the last,
 * so that the componentwise product gives the layer probabilities.
 */
inline std::vector<WaveFunctionPair> evolve_wavefunctions(const Chain& chain) {
    const auto* pair = std::get_if<WaveFunctionPair>(&chain.boundary);
    if (pair == nullptr) {
        throw std::invalid_argument("evolve_wavefunctions: chain boundary is not a product pair");
    }
    const std::size_t layers = chain.steps.size() + 1;
    std::vector<Eigen::VectorXd> forward(layers);
    std::vector<Eigen::VectorXd> conjugate(layers);
    forward[0] = pair->qf;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        forward[i + 1] = chain.steps[i].S * forward[i];
    }
    conjugate[layers - 1] = pair->qb;
    for (std::size_t i = chain.steps.size(); i-- > 0;) {
        conjugate[i] = chain.steps[i].S.transpose() * conjugate[i + 1];
    }
    std::vector<WaveFunctionPair> out;
    out.reserve(layers);
    for (std::size_t i = 0; i < layers; ++i) {
        out.emplace_back(forward[i], conjugate[i]);
    }
    return out;
}

/// Density trajectory; used_pseudo_inverse flags layers where a singular
/// step was conjugated with the pseudo-inverse and the trace renormalized.
struct DensityTrajectory {
    std::vector<ClassicalDensityMatrix> layers;
    bool used_pseudo_inverse = false;
};

/**
 * Evolves the classical density matrix through the chain.  Product
 * boundaries take the wave-function route, which stays defined through
 * singular projector steps; an explicit initial density matrix is conjugated
 * step by step, falling back to a flagged pseudo-inverse when a step is
 * singular.
 */
inline DensityTrajectory evolve_density(const Chain& chain) {
    DensityTrajectory out;
    if (std::holds_alternative<WaveFunctionPair>(chain.boundary)) {
        for (const auto& pair : evolve_wavefunctions(chain)) {
            out.layers.emplace_back(chain.M,
                                    Eigen::MatrixXd(pair.qf * pair.qb.transpose()));
        }
        return out;
    }
    ClassicalDensityMatrix rho = std::get<ClassicalDensityMatrix>(chain.boundary);
    out.layers.push_back(rho);
    for (const auto& step : chain.steps) {
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(step.S);
        Eigen::MatrixXd next;
        if (lu.isInvertible()) {
            next = step.S * rho.matrix * lu.inverse();
        } else {
            const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(step.S);
            next = step.S * rho.matrix * cod.pseudoInverse();
            const double trace = next.trace();
            if (std::abs(trace) < 1e-12) {
                throw std::domain_error("evolve_density: trace lost through singular step");
            }
            next /= trace;
            out.used_pseudo_inverse = true;
        }
        rho = ClassicalDensityMatrix(chain.M, std::move(next));
        out.layers.push_back(rho);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Preparation of a one-qubit state by projector steps.

struct PreparationReport {
    ProbabilityDistribution dist;
    Eigen::Vector3d rho;
    bool quantum_ok = false;
    bool pure = false;
};

/**
 * Applies the three-spin projector step to a distribution.  One application
 * equalizes the (s2, s3) sectors, leaving rho_2 = rho_3 = 0 and |rho_1| <= 1
 * regardless of the input, so the output always admits a one-qubit density
 * matrix; it is pure when the first spin was deterministic.
 */
inline PreparationReport prepare_quantum_state(const ProbabilityDistribution& initial,
                                               int steps = 1) {
    if (initial.M != 3) {
        throw std::invalid_argument("prepare_quantum_state: needs a three-spin distribution");
    }
    if (steps < 1) {
        throw std::invalid_argument("prepare_quantum_state: needs at least one step");
    }
    Eigen::VectorXd p = initial.p;
    const Eigen::MatrixXd s = hat_sp_matrix();
    for (int i = 0; i < steps; ++i) {
        p = s * p;
    }
    PreparationReport report{ProbabilityDistribution(3, std::move(p)), Eigen::Vector3d::Zero(),
                             false, false};
    const Eigen::VectorXd c = realization_extract(RealizationMap::Direct3, report.dist);
    report.rho = c;
    report.quantum_ok = c.squaredNorm() <= 1.0 + 1e-12;
    report.pure = std::abs(c.squaredNorm() - 1.0) <= 1e-12;
    return report;
}

// ---------------------------------------------------------------------------
// Reducibility to a plain probability map.

/// Verdict on whether a step acts on probabilities alone.  via_limit marks
/// singular projector steps, which map probabilities directly as a Markov
/// matrix once the preceding layer has collapsed the conjugate function.
struct ReducibilityReport {
    bool reducible = false;
    Eigen::MatrixXd w;
    bool via_limit = false;
};

/**
 * Tests whether the diagonal of the evolved density matrix depends only on
 * the input diagonal: S_{tau rho} S^{-1}_{sigma tau} must vanish for
 * sigma != rho.  Invertible steps failing the test need the off-diagonal
 * elements; singular nonnegative steps with unit column sums act as Markov
 * matrices in the projected regime.
 */
inline ReducibilityReport markov_reducibility(const Eigen::MatrixXd& s, double tol = 1e-10) {
    if (s.rows() != s.cols()) {
        throw std::invalid_argument("markov_reducibility: matrix must be square");
    }
    const Eigen::Index n = s.rows();
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    ReducibilityReport report;
    report.w = Eigen::MatrixXd::Zero(n, n);
    if (!lu.isInvertible()) {
        bool stochastic = s.minCoeff() >= -tol;
        for (Eigen::Index col = 0; col < n && stochastic; ++col) {
            stochastic = std::abs(s.col(col).sum() - 1.0) <= 1e-9;
        }
        if (stochastic) {
            report.reducible = true;
            report.via_limit = true;
            report.w = s;
        }
        return report;
    }
    const Eigen::MatrixXd inv = lu.inverse();
    for (Eigen::Index tau = 0; tau < n; ++tau) {
        for (Eigen::Index rho = 0; rho < n; ++rho) {
            for (Eigen::Index sigma = 0; sigma < n; ++sigma) {
                if (sigma != rho && std::abs(s(tau, rho) * inv(sigma, tau)) > tol) {
                    return report;
                }
            }
            report.w(tau, rho) = s(tau, rho) * inv(rho, tau);
        }
    }
    report.reducible = true;
    return report;
}

// ---------------------------------------------------------------------------
// Subsystem closure.

/// Fit of the subsystem evolution: coefficients c with
/// <transformed observables> = c <observables>, and, for a three-observable
/// quantum subsystem, a catalog unitary realizing the same conjugation.
struct ClosureReport {
    bool closed = false;
    Eigen::MatrixXd c;
    double residual = 0.0;
    std::optional<CMatrix> d;
};

namespace detail {

/// Searches the one-qubit gate catalog for a unitary whose conjugation of
/// the Pauli matrices reproduces the coefficient map c.
inline std::optional<CMatrix> matching_unitary(const Eigen::MatrixXd& c) {
    if (c.rows() != 3 || c.cols() != 3) {
        return std::nullopt;
    }
    for (const GateName g : {GateName::H, GateName::U12, GateName::U31, GateName::UZ,
                             GateName::UY, GateName::UX, GateName::T, GateName::PI4_31}) {
        if ((single_qubit_coefficient_rotation(g) - c).lpNorm<Eigen::Infinity>() < 1e-8) {
            return gate_matrix(g);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Tests whether the observables' evolution closes on itself: with
 * transformed operators S^{-1} A S, fits linear coefficients over a spanning
 * sample of density matrices (4x the parameter count) and reports closure
 * when the residual stays below 1e-9.
 */
inline ClosureReport subsystem_closure(const Eigen::MatrixXd& s,
                                       const std::vector<Eigen::MatrixXd>& observables) {
    const Eigen::Index n = s.rows();
    if (s.cols() != n) {
        throw std::invalid_argument("subsystem_closure: matrix must be square");
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("subsystem_closure: step must be invertible");
    }
    const Eigen::MatrixXd inv = lu.inverse();
    const int d = static_cast<int>(observables.size());
    std::vector<Eigen::MatrixXd> transformed;
    transformed.reserve(observables.size());
    for (const auto& a : observables) {
        if (a.rows() != n || a.cols() != n) {
            throw std::invalid_argument("subsystem_closure: observable size mismatch");
        }
        transformed.push_back(inv * a * s);
    }
    const int samples = 4 * d;
    std::mt19937 rng(20240824);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::exponential_distribution<double> expd(1.0);
    Eigen::MatrixXd x(d, samples);
    Eigen::MatrixXd y(d, samples);
    for (int i = 0; i < samples; ++i) {
        // Random density matrix: positive diagonal plus damped off-diagonals.
        Eigen::MatrixXd rho(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index col = 0; col < n; ++col) {
                rho(r, col) = r == col ? expd(rng) : 0.1 * normal(rng);
            }
        }
        rho /= rho.trace();
        for (int z = 0; z < d; ++z) {
            x(z, i) = (observables[static_cast<std::size_t>(z)] * rho).trace();
            y(z, i) = (transformed[static_cast<std::size_t>(z)] * rho).trace();
        }
    }
    ClosureReport report;
    const Eigen::MatrixXd ct = x.transpose().colPivHouseholderQr().solve(y.transpose());
    report.c = ct.transpose();
    report.residual = (report.c * x - y).lpNorm<Eigen::Infinity>();
    report.closed = report.residual <= 1e-9;
    if (report.closed) {
        report.d = detail::matching_unitary(report.c);
    }
    return report;
}

/// Diagonal single-spin observables of the three-spin one-qubit realization.
inline std::vector<Eigen::MatrixXd> direct3_observables() {
    std::vector<Eigen::MatrixXd> out;
    for (int gamma = 1; gamma <= 3; ++gamma) {
        Eigen::VectorXd diag(8);
        for (Eigen::Index tau = 0; tau < 8; ++tau) {
            diag[tau] = spin_value(tau, 3, gamma);
        }
        out.emplace_back(diag.asDiagonal());
    }
    return out;
}

// ---------------------------------------------------------------------------
// No-cloning.

struct CloningReport {
    bool clones_first = false;
    bool clones_second = false;
    double overlap = 0.0;
    bool consistent = false;
};

/**
 * Checks whether a step on the doubled state space clones two given states
 * against a shared ancilla: S(q (x) e) = q (x) q and the conjugate analogue.
 * When both clone, the conjugate-forward overlap of the two states must be
 * zero or one; any other value is reported as inconsistent.
 */
inline CloningReport no_cloning_check(const Eigen::MatrixXd& s, const WaveFunctionPair& first,
                                      const WaveFunctionPair& second,
                                      const WaveFunctionPair& ancilla, double tol = 1e-9) {
    const Eigen::Index n = first.qf.size();
    if (second.qf.size() != n || ancilla.qf.size() != n || s.rows() != n * n ||
        s.cols() != n * n) {
        throw std::invalid_argument("no_cloning_check: size mismatch");
    }
    if (std::abs(ancilla.qb.dot(ancilla.qf) - 1.0) > tol) {
        throw std::invalid_argument("no_cloning_check: ancilla must be normalized");
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("no_cloning_check: step must be invertible");
    }
    const Eigen::MatrixXd inv = lu.inverse();
    auto kron_vec = [n](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        Eigen::VectorXd out(n * n);
        for (Eigen::Index i = 0; i < n; ++i) {
            out.segment(i * n, n) = a[i] * b;
        }
        return out;
    };
    auto clones = [&](const WaveFunctionPair& state) {
        const Eigen::VectorXd fwd = s * kron_vec(state.qf, ancilla.qf);
        const Eigen::VectorXd bwd = inv.transpose() * kron_vec(state.qb, ancilla.qb);
        return (fwd - kron_vec(state.qf, state.qf)).lpNorm<Eigen::Infinity>() <= tol &&
               (bwd - kron_vec(state.qb, state.qb)).lpNorm<Eigen::Infinity>() <= tol;
    };
    CloningReport report;
    report.clones_first = clones(first);
    report.clones_second = clones(second);
    report.overlap = second.qb.dot(first.qf);
    const bool overlap_ok = std::abs(report.overlap) <= tol ||
                            std::abs(report.overlap - 1.0) <= tol;
    report.consistent = !(report.clones_first && report.clones_second) || overlap_ok;
    return report;
}

// ---------------------------------------------------------------------------
// Algebraic no-go checks for the controlled gate on six spins.

/**
 * Residuals of the fifteen operator-level relations a controlled-flip step
 * on the six-spin correlation space would have to satisfy: three
 * commutators, ten plain exchanges, and two sign-flipped exchanges.  No step
 * satisfies all of them, so at least one residual is always positive.
 */
inline std::vector<double> controlled_gate_relation_residuals(const UniqueJumpOp& jump) {
    if (jump.M() != 6) {
        throw std::invalid_argument("controlled_gate_relation_residuals: needs six spins");
    }
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    const PauliTensorBasis basis(2);
    auto diag = [&](int mu, int nu) { return map.sign_vector(basis.flat_index({mu, nu})); };
    // Relation list: observable pairs (lhs, rhs) with S A_lhs = sign A_rhs S;
    // commutators are the pairs with lhs == rhs.
    struct Relation {
        int lm, ln, rm, rn;
        double sign;
    };
    const std::vector<Relation> relations = {
        {3, 0, 3, 0, 1.0}, {0, 1, 0, 1, 1.0}, {3, 1, 3, 1, 1.0},
        {1, 1, 1, 0, 1.0}, {1, 0, 1, 1, 1.0}, {2, 1, 2, 0, 1.0}, {2, 0, 2, 1, 1.0},
        {3, 3, 0, 3, 1.0}, {0, 3, 3, 3, 1.0}, {3, 2, 0, 2, 1.0}, {0, 2, 3, 2, 1.0},
        {2, 2, 1, 3, -1.0}, {1, 3, 2, 2, -1.0}, {1, 2, 2, 3, 1.0}, {2, 3, 1, 2, 1.0},
    };
    std::vector<double> residuals;
    residuals.reserve(relations.size());
    for (const auto& rel : relations) {
        const Eigen::VectorXd lhs = diag(rel.lm, rel.ln);
        const Eigen::VectorXd rhs = diag(rel.rm, rel.rn);
        // For a permutation step, (S A)_{tau' tau} = a_tau on the image and
        // (A' S)_{tau' tau} = a'_{tau'}, so the relation reduces per column.
        double worst = 0.0;
        for (Eigen::Index tau = 0; tau < 64; ++tau) {
            worst = std::max(worst, std::abs(lhs[tau] - rel.sign * rhs[jump.image(tau)]));
        }
        residuals.push_back(worst);
    }
    return residuals;
}

/// Dense-matrix variant of the relation residuals for non-permutation steps.
inline std::vector<double> controlled_gate_relation_residuals(const Eigen::MatrixXd& s) {
    if (s.rows() != 64 || s.cols() != 64) {
        throw std::invalid_argument("controlled_gate_relation_residuals: needs a 64x64 step");
    }
    const BitQuantumMap map = BitQuantumMap::correlation(2);
    const PauliTensorBasis basis(2);
    auto diag = [&](int mu, int nu) {
        return Eigen::MatrixXd(map.sign_vector(basis.flat_index({mu, nu})).asDiagonal());
    };
    struct Relation {
        int lm, ln, rm, rn;
        double sign;
    };
    const std::vector<Relation> relations = {
        {3, 0, 3, 0, 1.0}, {0, 1, 0, 1, 1.0}, {3, 1, 3, 1, 1.0},
        {1, 1, 1, 0, 1.0}, {1, 0, 1, 1, 1.0}, {2, 1, 2, 0, 1.0}, {2, 0, 2, 1, 1.0},
        {3, 3, 0, 3, 1.0}, {0, 3, 3, 3, 1.0}, {3, 2, 0, 2, 1.0}, {0, 2, 3, 2, 1.0},
        {2, 2, 1, 3, -1.0}, {1, 3, 2, 2, -1.0}, {1, 2, 2, 3, 1.0}, {2, 3, 1, 2, 1.0},
    };
    std::vector<double> residuals;
    residuals.reserve(relations.size());
    for (const auto& rel : relations) {
        residuals.push_back((s * diag(rel.lm, rel.ln) - rel.sign * diag(rel.rm, rel.rn) * s)
                                .lpNorm<Eigen::Infinity>());
    }
    return residuals;
}

/**
 * Whether a transformation leaves the all-ones equipartition matrix
 * invariant: rows of T and columns of T^{-1} must each sum to one.  Doubly
 * stochastic matrices and all permutations qualify.
 */
inline bool preserves_equipartition(const Eigen::MatrixXd& t, double tol = 1e-10) {
    if (t.rows() != t.cols()) {
        throw std::invalid_argument("preserves_equipartition: matrix must be square");
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(t);
    if (!lu.isInvertible()) {
        return false;
    }
    const Eigen::MatrixXd inv = lu.inverse();
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        if (std::abs(t.row(i).sum() - 1.0) > tol || std::abs(inv.col(i).sum() - 1.0) > tol) {
            return false;
        }
    }
    const Eigen::MatrixXd e = Eigen::MatrixXd::Ones(t.rows(), t.cols());
    return (t * e * inv - e).lpNorm<Eigen::Infinity>() <= 1e-8;
}

}  // namespace isq
