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
 * @file entangled.hpp
 * Explicit classical wave functions and probability distributions realizing
 * entangled two-qubit states on six spins, orthogonal rotations of one-qubit
 * classical wave functions, and the witness showing that no state-independent
 * linear rotation can implement arbitrary unitary gates.
 */
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "classical_ops.hpp"
#include "maps.hpp"
#include "spin.hpp"

namespace isq {

/**
 * A six-spin classical wave function factorized over the three k-sectors.
 * Sector k holds the pair (s_k of qubit 1, s_k of qubit 2); the four sector
 * components are ordered (++), (+-), (-+), (--).
 */
struct SectorWaveFunction {
    Eigen::Vector4d q1;
    Eigen::Vector4d q2;
    Eigen::Vector4d q3;

    /// The 64-component wave function in the canonical spin-index order
    /// (s1, s2, s3 of qubit 1, then s1, s2, s3 of qubit 2).
    Eigen::VectorXd wavefunction() const {
        Eigen::VectorXd q(64);
        for (int a1 = 0; a1 < 4; ++a1) {
            for (int a2 = 0; a2 < 4; ++a2) {
                for (int a3 = 0; a3 < 4; ++a3) {
                    q[canonical_index(a1, a2, a3)] = q1[a1] * q2[a2] * q3[a3];
                }
            }
        }
        return q;
    }

    /// The induced probability distribution p_tau = q_tau^2.
    ProbabilityDistribution distribution() const {
        const Eigen::VectorXd q = wavefunction();
        return {6, q.cwiseProduct(q)};
    }

    /// Canonical configuration index for sector components (a1, a2, a3):
    /// component a of sector k fixes s_k of qubit 1 (+ for a < 2) and s_k of
    /// qubit 2 (+ for even a).
    static Eigen::Index canonical_index(int a1, int a2, int a3) {
        const int a[3] = {a1, a2, a3};
        Eigen::Index tau = 0;
        for (int k = 0; k < 3; ++k) {
            const int bit_first = a[k] < 2 ? 1 : 0;
            const int bit_second = a[k] % 2 == 0 ? 1 : 0;
            tau |= Eigen::Index{bit_first} << (5 - k);
            tau |= Eigen::Index{bit_second} << (2 - k);
        }
        return tau;
    }
};

/// An entangled-family member: sector factors, the assembled normalized wave
/// function, and its probability distribution.
struct EntangledFamilyState {
    SectorWaveFunction sectors;
    NormalizedClassicalWaveFunction wave;
    ProbabilityDistribution dist;
};

/**
 * Classical realization of the pure two-qubit state with quantum wave
 * function (0, cos theta, sin theta, 0).  Sectors 1 and 2 carry amplitudes
 * a = (cos + sin)/2 and b = (cos - sin)/2 with free signs eps1, eps2 on the
 * lower components; sector 3 carries (0, cos, sin, 0).  The probabilities do
 * not depend on the sign choices.
 */
inline EntangledFamilyState entangled_family(double theta, int eps1 = 1, int eps2 = 1) {
    if (eps1 * eps1 != 1 || eps2 * eps2 != 1) {
        throw std::invalid_argument("entangled_family: signs must be +-1");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double a = 0.5 * (c + s);
    const double b = 0.5 * (c - s);
    SectorWaveFunction sectors;
    sectors.q1 = Eigen::Vector4d(a, b, eps2 * b, eps1 * a);
    sectors.q2 = sectors.q1;
    sectors.q3 = Eigen::Vector4d(0.0, c, s, 0.0);
    EntangledFamilyState state{sectors, NormalizedClassicalWaveFunction(sectors.wavefunction()),
                               sectors.distribution()};
    return state;
}

/**
 * Classical wave function family for the state with both qubits up.  The
 * parameters (a, b) and (c, d) pick one member; single-spin expectations
 * vanish for every choice, but the same-sector correlations are
 * (a^2 - b^2)/(a^2 + b^2) and (c^2 - d^2)/(c^2 + d^2), so the extraction is
 * the pure both-up state exactly when |a| = |b| and |c| = |d|.  Within that
 * subfamily the wave function is still non-unique through the sign choices,
 * while the probabilities coincide.
 */
inline SectorWaveFunction product_state_wavefunction(double a, double b, double c, double d,
                                                     int sign1 = 1, int sign2 = 1) {
    if (a * a + b * b <= 0.0 || c * c + d * d <= 0.0) {
        throw std::invalid_argument("product_state_wavefunction: degenerate normalization");
    }
    if (sign1 * sign1 != 1 || sign2 * sign2 != 1) {
        throw std::invalid_argument("product_state_wavefunction: signs must be +-1");
    }
    const double n1 = 1.0 / std::sqrt(2.0 * (a * a + b * b));
    const double n2 = 1.0 / std::sqrt(2.0 * (c * c + d * d));
    SectorWaveFunction sectors;
    sectors.q1 = n1 * Eigen::Vector4d(a, b, sign1 * b, sign1 * a);
    sectors.q2 = n2 * Eigen::Vector4d(c, d, sign2 * d, sign2 * c);
    sectors.q3 = Eigen::Vector4d(1.0, 0.0, 0.0, 0.0);
    return sectors;
}

namespace detail {

/// Canonical three-spin index of factor components (i1, i2, i3), where
/// component 0 of each factor is the spin-up state.
inline Eigen::Index one_qubit_canonical_index(int i1, int i2, int i3) {
    return ((1 - i1) << 2) | ((1 - i2) << 1) | (1 - i3);
}

/// Kronecker product of three 2x2 factors reordered to the canonical
/// three-spin configuration index.
inline Eigen::MatrixXd kron3_canonical(const Eigen::Matrix2d& o1, const Eigen::Matrix2d& o2,
                                       const Eigen::Matrix2d& o3) {
    Eigen::MatrixXd out(8, 8);
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
            for (int i3 = 0; i3 < 2; ++i3) {
                for (int j1 = 0; j1 < 2; ++j1) {
                    for (int j2 = 0; j2 < 2; ++j2) {
                        for (int j3 = 0; j3 < 2; ++j3) {
                            out(one_qubit_canonical_index(i1, i2, i3),
                                one_qubit_canonical_index(j1, j2, j3)) =
                                o1(i1, j1) * o2(i2, j2) * o3(i3, j3);
                        }
                    }
                }
            }
        }
    }
    return out;
}

inline Eigen::Matrix2d rotation2(double angle) {
    Eigen::Matrix2d o;
    o << std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle);
    return o;
}

}  // namespace detail

/// Reference one-qubit classical wave function with <s3> = 1 and
/// <s1> = <s2> = 0, as an 8-component vector in canonical order.
inline Eigen::VectorXd one_qubit_reference_wavefunction() {
    Eigen::VectorXd q(8);
    const Eigen::Vector2d even(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const Eigen::Vector2d up(1.0, 0.0);
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
            for (int i3 = 0; i3 < 2; ++i3) {
                q[detail::one_qubit_canonical_index(i1, i2, i3)] =
                    even[i1] * even[i2] * up[i3];
            }
        }
    }
    return q;
}

/**
 * Orthogonal 8x8 transformation carrying the reference wave function to one
 * realizing the pure target state: a product of three plane rotations with
 * sin(2 theta_1) = rho_1, sin(2 theta_2) = rho_2, and the third angle fixed
 * by cos(theta_3) = sqrt((1 + rho_3)/2).
 */
inline Eigen::MatrixXd single_qubit_rotation_o(const Eigen::Vector3d& rho, double tol = 1e-9) {
    if (std::abs(rho.squaredNorm() - 1.0) > tol) {
        throw std::invalid_argument("single_qubit_rotation_o: target state must be pure");
    }
    for (int k = 0; k < 3; ++k) {
        if (std::abs(rho[k]) > 1.0 + tol) {
            throw std::invalid_argument("single_qubit_rotation_o: coefficient out of range");
        }
    }
    const double t1 = 0.5 * std::asin(std::clamp(rho[0], -1.0, 1.0));
    const double t2 = 0.5 * std::asin(std::clamp(rho[1], -1.0, 1.0));
    const double c3 = std::sqrt(std::clamp(0.5 * (1.0 + rho[2]), 0.0, 1.0));
    const double t3 = std::acos(std::clamp(c3, -1.0, 1.0));
    return detail::kron3_canonical(detail::rotation2(t1), detail::rotation2(t2),
                                   detail::rotation2(t3));
}

/// The fixed rotation that flips the third spin factor: it realizes the bit
/// flip on s3-eigenstates but cannot reproduce it on other states.
inline Eigen::MatrixXd bit_flip_rotation_o1() {
    Eigen::Matrix2d o3;
    o3 << 0.0, -1.0, 1.0, 0.0;
    return detail::kron3_canonical(Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Identity(),
                                   o3);
}

/// Outcome of the non-linearity demonstration.
struct NonlinearityReport {
    bool flips_s3_eigenstates = false;  ///< fixed rotation acts correctly there
    double rho2_before = 0.0;           ///< second coefficient of the test state
    double rho2_after = 0.0;            ///< unchanged by the fixed rotation
    double rho2_required = 0.0;         ///< what the gate demands
    bool witnesses_nonlinearity = false;
    double max_commutator_diagonal = 0.0;  ///< infinitesimal obstruction, exactly 0
};

namespace detail {

inline Eigen::Vector3d extract_from_wavefunction(const Eigen::VectorXd& q) {
    const Eigen::VectorXd p = q.cwiseProduct(q);
    return realization_extract_raw(RealizationMap::Direct3, p);
}

}  // namespace detail

/**
 * Demonstrates that no fixed linear rotation implements the bit-flip gate on
 * every state: the rotation that is exact on s3-eigenstates leaves the
 * second coefficient of a rho_2 = 1 state untouched, while the gate demands
 * a sign flip.  The infinitesimal form of the same obstruction is that the
 * commutator of any antisymmetric generator with a diagonal spin operator
 * has an identically vanishing diagonal.
 */
inline NonlinearityReport nonlinearity_witness(unsigned int seed = 20240824) {
    NonlinearityReport report;
    const Eigen::MatrixXd o1 = bit_flip_rotation_o1();
    // On both s3-eigenstates the rotation reproduces the gate's coefficient
    // map (rho_1, rho_2, rho_3) -> (rho_1, -rho_2, -rho_3).
    report.flips_s3_eigenstates = true;
    for (const double rho3 : {1.0, -1.0}) {
        const Eigen::MatrixXd o =
            single_qubit_rotation_o(Eigen::Vector3d(0.0, 0.0, rho3));
        const Eigen::VectorXd q = o * one_qubit_reference_wavefunction();
        const Eigen::Vector3d after = detail::extract_from_wavefunction(o1 * q);
        const Eigen::Vector3d expected(0.0, 0.0, -rho3);
        if ((after - expected).lpNorm<Eigen::Infinity>() > 1e-10) {
            report.flips_s3_eigenstates = false;
        }
    }
    // The rho_2 = 1 state: the same rotation leaves rho_2 invariant.
    const Eigen::MatrixXd o2 = single_qubit_rotation_o(Eigen::Vector3d(0.0, 1.0, 0.0));
    const Eigen::VectorXd q2 = o2 * one_qubit_reference_wavefunction();
    report.rho2_before = detail::extract_from_wavefunction(q2)[1];
    report.rho2_after = detail::extract_from_wavefunction(o1 * q2)[1];
    report.rho2_required = -report.rho2_before;
    report.witnesses_nonlinearity =
        std::abs(report.rho2_after - report.rho2_required) > 0.5;
    // Infinitesimal obstruction: diag([beta, s_k]) = 0 for antisymmetric beta.
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXd beta(8, 8);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                beta(i, j) = normal(rng);
            }
        }
        beta = 0.5 * (beta - beta.transpose()).eval();
        for (int gamma = 1; gamma <= 3; ++gamma) {
            Eigen::VectorXd diag(8);
            for (Eigen::Index tau = 0; tau < 8; ++tau) {
                diag[tau] = spin_value(tau, 3, gamma);
            }
            const Eigen::MatrixXd spin_op = diag.asDiagonal();
            const Eigen::MatrixXd comm = beta * spin_op - spin_op * beta;
            report.max_commutator_diagonal = std::max(
                report.max_commutator_diagonal,
                comm.diagonal().cwiseAbs().maxCoeff());
        }
    }
    return report;
}

}  // namespace isq
