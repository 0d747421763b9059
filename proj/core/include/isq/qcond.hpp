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
 * @file qcond.hpp
 * Quantum-condition diagnostics: positivity and purity reports, pairwise
 * correlation bounds, CHSH combinations, two-level-observable checks, the
 * commuting-triplet bound, and the 36-element basis decomposition of
 * two-qubit density matrices.
 */
#include <array>
#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "pauli.hpp"

namespace isq {

/// Eigenvalues at or above -kPositivityTol count as nonnegative.
inline constexpr double kPositivityTol = 1e-10;

/// Positivity and purity diagnostics of a density matrix.
struct PositivityReport {
    std::vector<double> eigenvalues;  ///< ascending
    bool positive = false;
    bool pure = false;
};

inline PositivityReport positivity_report(const QuantumDensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("positivity_report: eigendecomposition failed");
    }
    PositivityReport report;
    report.eigenvalues.assign(es.eigenvalues().data(),
                              es.eigenvalues().data() + es.eigenvalues().size());
    report.positive = es.eigenvalues().minCoeff() >= -kPositivityTol;
    report.pure = (rho.matrix * rho.matrix - rho.matrix).norm() <= kPositivityTol;
    return report;
}

inline nlohmann::json to_json(const PositivityReport& r) {
    return nlohmann::json{{"positive", r.positive},
                          {"pure", r.pure},
                          {"eigenvalues", r.eigenvalues}};
}

/// One violated pairwise bound: the pair (k,l) and its four sign-sector weights.
struct PairViolation {
    int k = 0;
    int l = 0;
    std::array<double, 4> weights{};  ///< (++, +-, -+, --)
};

/// Result of the nine pairwise two-spin bounds for a two-qubit state.
struct PairConstraintReport {
    bool satisfied = true;
    std::vector<PairViolation> violations;
    /// weights[(k-1)*3+(l-1)] = the (++, +-, -+, --) sector weights of pair (k,l)
    std::array<std::array<double, 4>, 9> weights{};
};

/**
 * @brief Check the nine pairwise correlation bounds of a two-qubit state.
 *
 * For each pair (k,l) the four weights
 *   w_{e1 e2} = (1 + e1 r_{k0} + e2 r_{0l} + e1 e2 r_{kl}) / 4
 * must form a probability distribution; nonnegativity of all four is
 * equivalent to the two-sided bound
 *   -1 + |r_{k0} + r_{0l}| <= r_{kl} <= 1 - |r_{k0} - r_{0l}|.
 */
inline PairConstraintReport pair_constraints(const PauliTensorBasis& basis,
                                             const QuantumDensityMatrix& rho) {
    if (basis.qubits() != 2 || rho.Q != 2) {
        throw std::invalid_argument("pair_constraints: two qubits required");
    }
    if (!positivity_report(rho).positive) {
        throw std::invalid_argument("pair_constraints: density matrix not positive");
    }
    PairConstraintReport report;
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            const double a = rho.coefficients[basis.flat_index({k, 0})];
            const double b = rho.coefficients[basis.flat_index({0, l})];
            const double c = rho.coefficients[basis.flat_index({k, l})];
            std::array<double, 4> w{};
            int i = 0;
            bool ok = true;
            for (int e1 : {+1, -1}) {
                for (int e2 : {+1, -1}) {
                    w[static_cast<std::size_t>(i)] =
                        (1.0 + e1 * a + e2 * b + e1 * e2 * c) / 4.0;
                    ok = ok && w[static_cast<std::size_t>(i)] >= -kPositivityTol;
                    ++i;
                }
            }
            report.weights[static_cast<std::size_t>((k - 1) * 3 + (l - 1))] = w;
            if (!ok) {
                report.satisfied = false;
                report.violations.push_back({k, l, w});
            }
        }
    }
    return report;
}

/// Signed measurement axis: a real unit 3-vector for one qubit.
struct MeasurementAxis {
    Eigen::Vector3d e;

    /// Axis +-e_k along coefficient direction k in {1,2,3}.
    static MeasurementAxis along(int k, int sign = +1) {
        if (k < 1 || k > 3 || (sign != 1 && sign != -1)) {
            throw std::invalid_argument("MeasurementAxis::along: bad arguments");
        }
        Eigen::Vector3d v = Eigen::Vector3d::Zero();
        v[k - 1] = static_cast<double>(sign);
        return {v};
    }
};

/// Two-qubit correlation <(a.S^(1))(b.S^(2))> from the coefficient table.
inline double axis_correlation(const PauliTensorBasis& basis,
                               const QuantumDensityMatrix& rho,
                               const MeasurementAxis& a, const MeasurementAxis& b) {
    double acc = 0.0;
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            acc += a.e[k - 1] * b.e[l - 1] * rho.coefficients[basis.flat_index({k, l})];
        }
    }
    return acc;
}

/**
 * @brief CHSH combination <AB> + <AB'> + <A'B> - <A'B'> for a two-qubit state.
 */
inline double chsh_value(const PauliTensorBasis& basis, const QuantumDensityMatrix& rho,
                         const MeasurementAxis& a, const MeasurementAxis& ap,
                         const MeasurementAxis& b, const MeasurementAxis& bp) {
    return axis_correlation(basis, rho, a, b) + axis_correlation(basis, rho, a, bp) +
           axis_correlation(basis, rho, ap, b) - axis_correlation(basis, rho, ap, bp);
}

/**
 * @brief Check whether A(e) = e_z L_z is a two-level observable (A^2 = 1).
 *
 * Requires e.e = 1 and the symmetric contraction d_{zyw} e_z e_y = 0 for
 * every w; the result is cross-checked against the matrix square.
 */
inline bool two_level_check(const PauliTensorBasis& basis, const StructureCoefficients& sc,
                            const Eigen::VectorXd& e, double tol = 1e-10) {
    if (e.size() != basis.size()) {
        throw std::invalid_argument("two_level_check: coefficient count mismatch");
    }
    bool ok = std::abs(e.squaredNorm() - 1.0) <= tol;
    for (int w = 0; ok && w < basis.size(); ++w) {
        double contraction = 0.0;
        for (int z = 0; z < basis.size(); ++z) {
            for (int y = 0; y < basis.size(); ++y) {
                contraction += sc.d(z, y, w) * e[z] * e[y];
            }
        }
        ok = std::abs(contraction) <= tol;
    }
    // Cross-check with the explicit matrix square.
    CMatrix a = CMatrix::Zero(basis.dim(), basis.dim());
    for (int z = 0; z < basis.size(); ++z) {
        a += e[z] * basis.generator(z);
    }
    const bool matrix_ok =
        (a * a - CMatrix::Identity(basis.dim(), basis.dim())).norm() <= 1e-8;
    if (ok != matrix_ok) {
        throw std::runtime_error("two_level_check: algebraic and matrix checks disagree");
    }
    return ok;
}

/**
 * @brief Expectation of the commuting triplet observable
 * M = L_{30} + L_{03} - L_{33} = diag(1,1,1,-3).
 *
 * Equals 1 - 4 rho_44; values outside [-3, 1] flag a non-positive state.
 */
inline double m33_bound(const QuantumDensityMatrix& rho) {
    if (rho.Q != 2) {
        throw std::invalid_argument("m33_bound: two qubits required");
    }
    return 1.0 - 4.0 * rho.matrix(3, 3).real();
}

/**
 * @brief One of the 36 pure product basis states for two qubits:
 * rho = (1/4)(1 + e1 L_{k0} + e2 L_{0l} + e1 e2 L_{kl}).
 */
inline QuantumDensityMatrix pair_basis_state(const PauliTensorBasis& basis, int k, int l,
                                             int e1, int e2) {
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(basis.size());
    coeff[basis.flat_index({k, 0})] = e1;
    coeff[basis.flat_index({0, l})] = e2;
    coeff[basis.flat_index({k, l})] = e1 * e2;
    return rho_from_coefficients(basis, coeff);
}

/// 36 decomposition weights indexed as [(k-1)*3+(l-1)][sign sector (++,+-,-+,--)].
struct BasisDecomposition {
    std::array<std::array<double, 4>, 9> alpha{};

    [[nodiscard]] double sum() const {
        double s = 0.0;
        for (const auto& row : alpha) {
            for (double v : row) {
                s += v;
            }
        }
        return s;
    }
};

/**
 * @brief Deterministic decomposition of a Hermitian trace-one matrix over
 * the 36 pair basis states.
 *
 * The decomposition is not unique; we return the minimum-Euclidean-norm
 * solution, which splits the identity weight equally over the nine pairs
 * and each single-qubit coefficient equally over its three pairs:
 *   alpha_{kl}^{e1 e2} = (1/9 + e1 r_{k0}/3 + e2 r_{0l}/3 + e1 e2 r_{kl}) / 4.
 * Weights may be negative for entangled input; the reassembly is exact.
 */
inline BasisDecomposition basis_decomposition(const PauliTensorBasis& basis,
                                              const QuantumDensityMatrix& rho) {
    if (basis.qubits() != 2 || rho.Q != 2) {
        throw std::invalid_argument("basis_decomposition: two qubits required");
    }
    BasisDecomposition out;
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            const double a = rho.coefficients[basis.flat_index({k, 0})] / 3.0;
            const double b = rho.coefficients[basis.flat_index({0, l})] / 3.0;
            const double c = rho.coefficients[basis.flat_index({k, l})];
            int i = 0;
            for (int e1 : {+1, -1}) {
                for (int e2 : {+1, -1}) {
                    out.alpha[static_cast<std::size_t>((k - 1) * 3 + (l - 1))]
                             [static_cast<std::size_t>(i)] =
                        (1.0 / 9.0 + e1 * a + e2 * b + e1 * e2 * c) / 4.0;
                    ++i;
                }
            }
        }
    }
    return out;
}

/// Reassemble a matrix from its 36 decomposition weights.
inline CMatrix reassemble_decomposition(const PauliTensorBasis& basis,
                                        const BasisDecomposition& dec) {
    CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            int i = 0;
            for (int e1 : {+1, -1}) {
                for (int e2 : {+1, -1}) {
                    m += dec.alpha[static_cast<std::size_t>((k - 1) * 3 + (l - 1))]
                                  [static_cast<std::size_t>(i)] *
                         pair_basis_state(basis, k, l, e1, e2).matrix;
                    ++i;
                }
            }
        }
    }
    return m;
}

}  // namespace isq
