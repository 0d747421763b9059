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
 * @file gates.hpp
 * Gate library and unitary evolution of density matrices: named gate
 * matrices, embedding into multi-qubit registers, projective gate periods,
 * infinitesimal coefficient rotations, the von Neumann step, and the
 * two-step measurement correlation.
 */
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pauli.hpp"

namespace isq {

/// Named gates available in the library.
enum class GateName { H, U12, U31, UZ, UY, UX, T, CNOT, SWAP, PI4_31, CONJ };

inline std::string gate_name_string(GateName g) {
    switch (g) {
        case GateName::H: return "H";
        case GateName::U12: return "U12";
        case GateName::U31: return "U31";
        case GateName::UZ: return "UZ";
        case GateName::UY: return "UY";
        case GateName::UX: return "UX";
        case GateName::T: return "T";
        case GateName::CNOT: return "CNOT";
        case GateName::SWAP: return "SWAP";
        case GateName::PI4_31: return "PI4_31";
        case GateName::CONJ: return "CONJ";
    }
    throw std::invalid_argument("gate_name_string: unknown gate");
}

inline std::optional<GateName> gate_name_from_string(const std::string& s) {
    static const std::vector<std::pair<std::string, GateName>> table = {
        {"H", GateName::H},       {"U12", GateName::U12},   {"U31", GateName::U31},
        {"UZ", GateName::UZ},     {"UY", GateName::UY},     {"UX", GateName::UX},
        {"T", GateName::T},       {"CNOT", GateName::CNOT}, {"SWAP", GateName::SWAP},
        {"PI4_31", GateName::PI4_31}, {"CONJ", GateName::CONJ}};
    for (const auto& [name, g] : table) {
        if (name == s) {
            return g;
        }
    }
    return std::nullopt;
}

/// Number of qubits a gate acts on (CONJ acts on the whole register).
inline int gate_arity(GateName g) {
    switch (g) {
        case GateName::CNOT:
        case GateName::SWAP:
            return 2;
        case GateName::CONJ:
            return 0;
        default:
            return 1;
    }
}

/// Unitary matrix of a named gate in its own 2^arity-dimensional space.
inline CMatrix gate_matrix(GateName g) {
    using std::numbers::sqrt2;
    const double is2 = 1.0 / sqrt2;
    switch (g) {
        case GateName::H: {
            CMatrix m(2, 2);
            m << is2, is2, is2, -is2;
            return m;
        }
        case GateName::U12: {
            CMatrix m(2, 2);
            m << 1, 0, 0, Complex(0, -1);
            return m;
        }
        case GateName::U31: {
            CMatrix m(2, 2);
            m << is2, is2, -is2, is2;
            return m;
        }
        case GateName::UZ: {
            CMatrix m(2, 2);
            m << 1, 0, 0, -1;
            return m;
        }
        case GateName::UY: {
            CMatrix m(2, 2);
            m << 0, 1, -1, 0;
            return m;
        }
        case GateName::UX: {
            CMatrix m(2, 2);
            m << 0, 1, 1, 0;
            return m;
        }
        case GateName::T: {
            CMatrix m(2, 2);
            m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0);
            return m;
        }
        case GateName::PI4_31: {
            // Matrix rotation by pi/8; conjugation doubles the angle, so this
            // rotates the (rho_1, rho_3) coefficients by pi/4 and squares to
            // U31.
            const double c = std::cos(std::numbers::pi / 8.0);
            const double s = std::sin(std::numbers::pi / 8.0);
            CMatrix m(2, 2);
            m << c, s, -s, c;
            return m;
        }
        case GateName::CNOT: {
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 1) = 1;
            m(2, 3) = 1;
            m(3, 2) = 1;
            return m;
        }
        case GateName::SWAP: {
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 2) = 1;
            m(2, 1) = 1;
            m(3, 3) = 1;
            return m;
        }
        case GateName::CONJ:
            throw std::invalid_argument("gate_matrix: CONJ is a coefficient map, not a matrix");
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

/**
 * @brief Gate instance: a named gate applied to specific target qubits.
 *
 * Targets are 1-based. CONJ takes no targets (complex conjugation of the
 * whole density matrix, implemented as a coefficient map).
 */
struct GateSpec {
    GateName name;
    std::vector<int> targets;
};

/**
 * @brief Embed a 1- or 2-qubit unitary into a Q-qubit register.
 *
 * Qubit 1 occupies the most significant position of the computational
 * basis index. Targets must be distinct and in range.
 */
inline CMatrix embed_unitary(int Q, const CMatrix& u, const std::vector<int>& targets) {
    const int arity = static_cast<int>(targets.size());
    if (u.rows() != (1 << arity) || u.cols() != (1 << arity)) {
        throw std::invalid_argument("embed_unitary: matrix size does not match target count");
    }
    for (int t : targets) {
        if (t < 1 || t > Q) {
            throw std::invalid_argument("embed_unitary: target out of range");
        }
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("embed_unitary: duplicate targets");
    }
    const int dim = 1 << Q;
    CMatrix full = CMatrix::Zero(dim, dim);
    auto sub_bits = [&](int index) {
        int v = 0;
        for (int t : targets) {
            v = (v << 1) | ((index >> (Q - t)) & 1);
        }
        return v;
    };
    auto replace_bits = [&](int index, int v) {
        int out = index;
        for (int i = arity - 1; i >= 0; --i) {
            const int t = targets[static_cast<std::size_t>(i)];
            const int bit = v & 1;
            v >>= 1;
            out = (out & ~(1 << (Q - t))) | (bit << (Q - t));
        }
        return out;
    };
    for (int col = 0; col < dim; ++col) {
        const int vin = sub_bits(col);
        for (int vout = 0; vout < (1 << arity); ++vout) {
            const Complex amp = u(vout, vin);
            if (amp != Complex(0, 0)) {
                full(replace_bits(col, vout), col) += amp;
            }
        }
    }
    return full;
}

/// Full-register unitary of a gate instance (not defined for CONJ).
inline CMatrix gate_unitary(int Q, const GateSpec& g) {
    if (g.name == GateName::CONJ) {
        throw std::invalid_argument("gate_unitary: CONJ has no unitary matrix");
    }
    if (static_cast<int>(g.targets.size()) != gate_arity(g.name)) {
        throw std::invalid_argument("gate_unitary: wrong target count");
    }
    return embed_unitary(Q, gate_matrix(g.name), g.targets);
}

/// Apply a gate: rho -> U rho U^dagger, or the complex conjugate for CONJ.
inline QuantumDensityMatrix apply_unitary(const PauliTensorBasis& basis,
                                          const QuantumDensityMatrix& rho,
                                          const GateSpec& g) {
    if (rho.Q != basis.qubits()) {
        throw std::invalid_argument("apply_unitary: qubit count mismatch");
    }
    CMatrix next;
    if (g.name == GateName::CONJ) {
        next = rho.matrix.conjugate();
    } else {
        const CMatrix u = gate_unitary(basis.qubits(), g);
        next = u * rho.matrix * u.adjoint();
    }
    return {rho.Q, next, coefficients_from_rho(basis, next)};
}

/**
 * @brief Smallest n <= max_n with U^n proportional to the identity.
 *
 * The overall phase is projected out: U^n counts as the identity when
 * ||U^n - lambda 1|| <= tol for the unit-modulus scalar lambda closest to
 * the diagonal.
 */
inline std::optional<int> gate_period(const CMatrix& u, int max_n, double tol = 1e-9) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("gate_period: square matrix required");
    }
    CMatrix power = CMatrix::Identity(u.rows(), u.cols());
    for (int n = 1; n <= max_n; ++n) {
        power = u * power;
        // Best phase: the normalized mean diagonal entry.
        Complex lambda = power.trace() / static_cast<double>(power.rows());
        const double mod = std::abs(lambda);
        if (mod > 0.5) {
            lambda /= mod;
            if ((power - lambda * CMatrix::Identity(u.rows(), u.cols())).norm() <= tol) {
                return n;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<int> gate_period(const GateSpec& g, int max_n, double tol = 1e-9) {
    return gate_period(gate_matrix(g.name), max_n, tol);
}

/**
 * @brief Infinitesimal coefficient rotation delta rho_z = -2 eps_y f_{yxz} rho_x.
 */
inline QuantumDensityMatrix infinitesimal_step(const PauliTensorBasis& basis,
                                               const StructureCoefficients& sc,
                                               const QuantumDensityMatrix& rho,
                                               const Eigen::VectorXd& eps) {
    if (eps.size() != basis.size()) {
        throw std::invalid_argument("infinitesimal_step: coefficient count mismatch");
    }
    if (eps.lpNorm<Eigen::Infinity>() > 0.1) {
        throw std::invalid_argument("infinitesimal_step: step too large");
    }
    Eigen::VectorXd next = rho.coefficients;
    for (int z = 0; z < basis.size(); ++z) {
        double delta = 0.0;
        for (int y = 0; y < basis.size(); ++y) {
            if (eps[y] == 0.0) {
                continue;
            }
            for (int x = 0; x < basis.size(); ++x) {
                delta += eps[y] * sc.f(y, x, z) * rho.coefficients[x];
            }
        }
        next[z] -= 2.0 * delta;
    }
    return rho_from_coefficients(basis, next);
}

/// Hamiltonian H = -eps_z L_z / eps generating the infinitesimal step above.
inline CMatrix hamiltonian_from_eps(const PauliTensorBasis& basis,
                                    const Eigen::VectorXd& eps, double dt) {
    if (eps.size() != basis.size()) {
        throw std::invalid_argument("hamiltonian_from_eps: coefficient count mismatch");
    }
    CMatrix h = CMatrix::Zero(basis.dim(), basis.dim());
    for (int z = 0; z < basis.size(); ++z) {
        h -= (eps[z] / dt) * basis.generator(z);
    }
    return h;
}

/// One exact von Neumann step rho -> exp(-i dt H) rho exp(+i dt H).
inline QuantumDensityMatrix von_neumann_step(const PauliTensorBasis& basis,
                                             const QuantumDensityMatrix& rho,
                                             const CMatrix& h, double dt) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("von_neumann_step: eigendecomposition failed");
    }
    CMatrix u = CMatrix::Zero(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        u += std::polar(1.0, -dt * es.eigenvalues()[i]) *
             (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
    }
    const CMatrix next = u * rho.matrix * u.adjoint();
    return {rho.Q, next, coefficients_from_rho(basis, next)};
}

/**
 * @brief Two-step measurement correlation of a single qubit.
 *
 * Returns the symmetrized correlation (1/2) tr({A2, A1} rho) with
 * A1 = tau_1 measured before the step and A2 = U^dagger tau_2 U measured
 * after the unitary step U.
 */
inline double measurement_correlation(const QuantumDensityMatrix& rho, const CMatrix& u) {
    if (rho.Q != 1 || u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("measurement_correlation: single qubit only");
    }
    const CMatrix a1 = pauli_matrix(1);
    const CMatrix a2 = u.adjoint() * pauli_matrix(2) * u;
    return 0.5 * ((a2 * a1 + a1 * a2) * rho.matrix).trace().real();
}

}  // namespace isq
