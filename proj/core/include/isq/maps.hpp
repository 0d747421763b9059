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
 * @file maps.hpp
 * Maps from classical spin statistics to quantum density matrices: the direct
 * map (one spin per Pauli coefficient), the correlation map (3Q spins, with
 * coefficients read from spin products), and linear maps defined through
 * diagonal classical operators.  Includes samplers that construct classical
 * distributions realizing a given density matrix where a construction is
 * known.
 */
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pauli.hpp"
#include "spin.hpp"

namespace isq {

/// Thrown when no classical construction for a requested density matrix is
/// known under the chosen map.  The supported family is deliberately limited
/// to constructions with a proof; nothing outside it is guessed.
struct ConstructionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A (possibly off-diagonal) real density matrix over the 2^M classical
/// states.  Diagonal entries are the classical probabilities.
struct ClassicalDensityMatrix {
    int M = 0;
    Eigen::MatrixXd matrix;

    ClassicalDensityMatrix(int m, Eigen::MatrixXd mat) : M(m), matrix(std::move(mat)) {
        const Eigen::Index n = Eigen::Index{1} << M;
        if (matrix.rows() != n || matrix.cols() != n) {
            throw std::invalid_argument("ClassicalDensityMatrix: size mismatch");
        }
    }

    static ClassicalDensityMatrix from_distribution(const ProbabilityDistribution& dist) {
        return ClassicalDensityMatrix(dist.M, Eigen::MatrixXd(dist.p.asDiagonal()));
    }
};

/// Which observable table a BitQuantumMap uses.
enum class MapVariant { Direct, Correlation, DensityMatrixLinear };

/**
 * A map assigning to each flat Pauli index z a classical observable: a single
 * spin (direct), an ordered product of spins (correlation), or an arbitrary
 * diagonal +-1 operator (density-linear).  Immutable after construction.
 */
class BitQuantumMap {
public:
    /// Direct map: one spin per coefficient, M = 4^Q - 1 spins in flat Pauli
    /// index order.  Only Q <= 2 fits in a dense state space.
    static BitQuantumMap direct(int q) {
        check_q(q);
        const int m = (1 << (2 * q)) - 1;
        if (m > kHardMaxSpins) {
            throw std::invalid_argument("BitQuantumMap::direct: too many spins");
        }
        BitQuantumMap map(MapVariant::Direct, q, m);
        const PauliTensorBasis basis(q);
        for (int z = 0; z < basis.size(); ++z) {
            map.spin_products_.push_back({z + 1});
        }
        return map;
    }

    /// Correlation map: 3Q spins, three per qubit; the coefficient for
    /// multi-index (mu_1 ... mu_Q) is the expectation of the product of
    /// s_{mu_i} on qubit i over the nonzero mu_i.
    static BitQuantumMap correlation(int q) {
        check_q(q);
        BitQuantumMap map(MapVariant::Correlation, q, 3 * q);
        const PauliTensorBasis basis(q);
        for (int z = 0; z < basis.size(); ++z) {
            const auto mu = basis.multi_index(z);
            std::vector<int> spins;
            for (int i = 0; i < q; ++i) {
                if (mu[i] != 0) {
                    spins.push_back(3 * i + mu[i]);
                }
            }
            map.spin_products_.push_back(std::move(spins));
        }
        return map;
    }

    /// Density-linear map from an explicit table of diagonal +-1 operators,
    /// one vector of length 2^M per flat index.
    static BitQuantumMap density_linear(int q, int m, std::vector<Eigen::VectorXd> diagonals) {
        check_q(q);
        const PauliTensorBasis basis(q);
        if (static_cast<int>(diagonals.size()) != basis.size()) {
            throw std::invalid_argument("BitQuantumMap::density_linear: table size mismatch");
        }
        const Eigen::Index n = Eigen::Index{1} << m;
        for (const auto& d : diagonals) {
            if (d.size() != n) {
                throw std::invalid_argument("BitQuantumMap::density_linear: operator size mismatch");
            }
            for (Eigen::Index i = 0; i < n; ++i) {
                if (std::abs(std::abs(d[i]) - 1.0) > 1e-12) {
                    throw std::invalid_argument("BitQuantumMap::density_linear: entries must be +-1");
                }
            }
        }
        BitQuantumMap map(MapVariant::DensityMatrixLinear, q, m);
        map.diagonals_ = std::move(diagonals);
        return map;
    }

    /// Density-linear map whose operators are the spin-sign diagonals of the
    /// direct map; acting on diag(p) it reproduces the direct map on p.
    static BitQuantumMap density_linear_from_direct(int q) {
        const BitQuantumMap d = direct(q);
        std::vector<Eigen::VectorXd> diagonals;
        const PauliTensorBasis basis(q);
        diagonals.reserve(basis.size());
        for (int z = 0; z < basis.size(); ++z) {
            diagonals.push_back(d.sign_vector(z));
        }
        return density_linear(q, d.M(), std::move(diagonals));
    }

    MapVariant variant() const { return variant_; }
    int Q() const { return q_; }
    int M() const { return m_; }

    /// Spin product (1-based indices) for flat index z; empty for
    /// density-linear maps.
    const std::vector<int>& spins(int z) const {
        if (variant_ == MapVariant::DensityMatrixLinear) {
            throw std::logic_error("BitQuantumMap::spins: density-linear map has no spin table");
        }
        return spin_products_.at(static_cast<std::size_t>(z));
    }

    /// Value of observable z on every classical configuration, as a vector of
    /// length 2^M.
    Eigen::VectorXd sign_vector(int z) const {
        if (variant_ == MapVariant::DensityMatrixLinear) {
            return diagonals_.at(static_cast<std::size_t>(z));
        }
        const auto& spins = spin_products_.at(static_cast<std::size_t>(z));
        const Eigen::Index n = Eigen::Index{1} << m_;
        Eigen::VectorXd v(n);
        for (Eigen::Index tau = 0; tau < n; ++tau) {
            int sign = 1;
            for (int gamma : spins) {
                sign *= spin_value(tau, m_, gamma);
            }
            v[tau] = static_cast<double>(sign);
        }
        return v;
    }

private:
    BitQuantumMap(MapVariant variant, int q, int m) : variant_(variant), q_(q), m_(m) {}

    static void check_q(int q) {
        if (q < 1 || q > 3) {
            throw std::invalid_argument("BitQuantumMap: Q must be 1..3");
        }
    }

    MapVariant variant_;
    int q_;
    int m_;
    std::vector<std::vector<int>> spin_products_;
    std::vector<Eigen::VectorXd> diagonals_;
};

/// Reads the density matrix off a classical probability distribution:
/// rho_z = <observable z>.
inline QuantumDensityMatrix extract_rho(const BitQuantumMap& map,
                                        const ProbabilityDistribution& dist) {
    if (dist.M != map.M()) {
        throw std::invalid_argument("extract_rho: spin count mismatch");
    }
    const PauliTensorBasis basis(map.Q());
    Eigen::VectorXd coeff(basis.size());
    for (int z = 0; z < basis.size(); ++z) {
        coeff[z] = map.sign_vector(z).dot(dist.p);
    }
    return rho_from_coefficients(basis, coeff);
}

/// Reads the density matrix off a classical density matrix:
/// rho_z = tr(A'_z rho'); only the diagonal of rho' enters since every
/// observable here is diagonal.
inline QuantumDensityMatrix extract_rho(const BitQuantumMap& map,
                                        const ClassicalDensityMatrix& rho_cl) {
    if (rho_cl.M != map.M()) {
        throw std::invalid_argument("extract_rho: spin count mismatch");
    }
    const PauliTensorBasis basis(map.Q());
    const Eigen::VectorXd diag = rho_cl.matrix.diagonal();
    Eigen::VectorXd coeff(basis.size());
    for (int z = 0; z < basis.size(); ++z) {
        coeff[z] = map.sign_vector(z).dot(diag);
    }
    return rho_from_coefficients(basis, coeff);
}

/// Checks that the classical-density-matrix map is linear:
/// extracting from alpha*rho1 + beta*rho2 equals the same combination of the
/// individual extractions.  Holds unconditionally by construction; exposed as
/// a runtime check.
inline bool linearity_check(const BitQuantumMap& map, const ClassicalDensityMatrix& a,
                            const ClassicalDensityMatrix& b, double alpha, double beta,
                            double tol = 1e-12) {
    if (a.M != map.M() || b.M != map.M()) {
        throw std::invalid_argument("linearity_check: spin count mismatch");
    }
    const ClassicalDensityMatrix mix(map.M(), alpha * a.matrix + beta * b.matrix);
    const QuantumDensityMatrix lhs = extract_rho(map, mix);
    const QuantumDensityMatrix ra = extract_rho(map, a);
    const QuantumDensityMatrix rb = extract_rho(map, b);
    const Eigen::VectorXd rhs = alpha * ra.coefficients + beta * rb.coefficients;
    return (lhs.coefficients - rhs).lpNorm<Eigen::Infinity>() <= tol;
}

namespace detail {

/// Joins two independent distributions; the first factor occupies the most
/// significant bits, matching the spin numbering convention.
inline ProbabilityDistribution join_product(const ProbabilityDistribution& a,
                                            const ProbabilityDistribution& b) {
    const int m = a.M + b.M;
    Eigen::VectorXd p(Eigen::Index{1} << m);
    for (Eigen::Index ta = 0; ta < a.p.size(); ++ta) {
        for (Eigen::Index tb = 0; tb < b.p.size(); ++tb) {
            p[(ta << b.M) | tb] = a.p[ta] * b.p[tb];
        }
    }
    return ProbabilityDistribution(m, std::move(p));
}

/// Independent-spin distribution over M spins with <s_gamma> = means[gamma-1].
inline ProbabilityDistribution bernoulli_distribution(const Eigen::VectorXd& means) {
    const int m = static_cast<int>(means.size());
    for (Eigen::Index i = 0; i < means.size(); ++i) {
        if (std::abs(means[i]) > 1.0 + 1e-12) {
            throw std::invalid_argument("bernoulli_distribution: |mean| > 1");
        }
    }
    Eigen::VectorXd p(Eigen::Index{1} << m);
    for (Eigen::Index tau = 0; tau < p.size(); ++tau) {
        double w = 1.0;
        for (int gamma = 1; gamma <= m; ++gamma) {
            const double mean = std::clamp(means[gamma - 1], -1.0, 1.0);
            w *= 0.5 * (1.0 + spin_value(tau, m, gamma) * mean);
        }
        p[tau] = w;
    }
    return ProbabilityDistribution(m, std::move(p));
}

/// The 24 signed permutation matrices with determinant +1, i.e. the
/// coefficient rotations realizable by single-qubit spin exchanges and flips.
inline const std::vector<Eigen::Matrix3i>& discrete_rotations() {
    static const std::vector<Eigen::Matrix3i> group = [] {
        Eigen::Matrix3i r12;
        r12 << 0, 1, 0, -1, 0, 0, 0, 0, 1;
        Eigen::Matrix3i r31;
        r31 << 0, 0, -1, 0, 1, 0, 1, 0, 0;
        std::vector<Eigen::Matrix3i> elems{Eigen::Matrix3i::Identity()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                for (const auto& g : {r12, r31}) {
                    const Eigen::Matrix3i cand = g * elems[i];
                    bool found = false;
                    for (const auto& e : elems) {
                        if (e == cand) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        elems.push_back(cand);
                        grew = true;
                    }
                }
            }
        }
        return elems;
    }();
    return group;
}

/// Partial trace over the last `q_b` qubits of a 2^(q_a+q_b) density matrix.
inline CMatrix partial_trace_last(const CMatrix& m, int q_a, int q_b) {
    const Eigen::Index da = Eigen::Index{1} << q_a;
    const Eigen::Index db = Eigen::Index{1} << q_b;
    CMatrix out = CMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            for (Eigen::Index k = 0; k < db; ++k) {
                out(i, j) += m(i * db + k, j * db + k);
            }
        }
    }
    return out;
}

/// Partial trace over the first `q_a` qubits.
inline CMatrix partial_trace_first(const CMatrix& m, int q_a, int q_b) {
    const Eigen::Index da = Eigen::Index{1} << q_a;
    const Eigen::Index db = Eigen::Index{1} << q_b;
    CMatrix out = CMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; ++i) {
        for (Eigen::Index j = 0; j < db; ++j) {
            for (Eigen::Index k = 0; k < da; ++k) {
                out(i, j) += m(k * db + i, k * db + j);
            }
        }
    }
    return out;
}

/// Six-spin sector-product distribution for the two-qubit state with
/// coefficients rho_30 = -rho_03 = cos(2 theta), rho_11 = rho_22 =
/// sin(2 theta), rho_33 = -1 and all others zero.  Spin order is
/// (s1,s2,s3) of qubit 1 followed by (s1,s2,s3) of qubit 2; sector k pairs
/// spin k with spin 3+k.
inline ProbabilityDistribution theta_family_distribution(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double a = 0.5 * (c + s);
    const double b = 0.5 * (c - s);
    // Per-sector probabilities indexed by (bit1, bit2), bit = 1 meaning +1.
    auto sector12 = [&](int b1, int b2) {
        return (b1 == b2) ? a * a : b * b;
    };
    auto sector3 = [&](int b1, int b2) {
        if (b1 == 1 && b2 == 0) return c * c;
        if (b1 == 0 && b2 == 1) return s * s;
        return 0.0;
    };
    const int m = 6;
    Eigen::VectorXd p(Eigen::Index{1} << m);
    for (Eigen::Index tau = 0; tau < p.size(); ++tau) {
        const SpinConfig cfg = config_from_index(tau, m);
        double w = 1.0;
        w *= sector12(cfg.bits[0], cfg.bits[3]);
        w *= sector12(cfg.bits[1], cfg.bits[4]);
        w *= sector3(cfg.bits[2], cfg.bits[5]);
        p[tau] = w;
    }
    return ProbabilityDistribution(m, std::move(p));
}

/// Applies signed spin rotations r1 (spins 1..3) and r2 (spins 4..6) to a
/// six-spin distribution: new spin k reads sign * old spin j where
/// r[k][j] = sign.
inline ProbabilityDistribution rotate_six_spin(const ProbabilityDistribution& dist,
                                               const Eigen::Matrix3i& r1,
                                               const Eigen::Matrix3i& r2) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(dist.p.size());
    for (Eigen::Index tau = 0; tau < dist.p.size(); ++tau) {
        int new_bits[6];
        for (int k = 0; k < 3; ++k) {
            for (int j = 0; j < 3; ++j) {
                if (r1(k, j) != 0) {
                    const int sv = spin_value(tau, 6, j + 1) * r1(k, j);
                    new_bits[k] = sv > 0 ? 1 : 0;
                }
                if (r2(k, j) != 0) {
                    const int sv = spin_value(tau, 6, 3 + j + 1) * r2(k, j);
                    new_bits[3 + k] = sv > 0 ? 1 : 0;
                }
            }
        }
        Eigen::Index out = 0;
        for (int g = 0; g < 6; ++g) {
            out = (out << 1) | new_bits[g];
        }
        p[out] += dist.p[tau];
    }
    return ProbabilityDistribution(6, std::move(p));
}

/// Attempts the two-qubit construction: the canonical theta family up to
/// discrete local rotations on either qubit.
inline std::optional<ProbabilityDistribution> try_theta_image(const CMatrix& rho_matrix) {
    const PauliTensorBasis basis(2);
    const Eigen::VectorXd coeff = coefficients_from_rho(basis, rho_matrix);
    Eigen::Vector3d v1;
    Eigen::Vector3d v2;
    Eigen::Matrix3d c;
    for (int k = 1; k <= 3; ++k) {
        v1[k - 1] = coeff[basis.flat_index({k, 0})];
        v2[k - 1] = coeff[basis.flat_index({0, k})];
        for (int l = 1; l <= 3; ++l) {
            c(k - 1, l - 1) = coeff[basis.flat_index({k, l})];
        }
    }
    const double tol = 1e-9;
    for (const auto& r1 : discrete_rotations()) {
        const Eigen::Matrix3d r1d = r1.cast<double>();
        const Eigen::Vector3d w1 = r1d.transpose() * v1;
        if (std::abs(w1[0]) > tol || std::abs(w1[1]) > tol) {
            continue;
        }
        for (const auto& r2 : discrete_rotations()) {
            const Eigen::Matrix3d r2d = r2.cast<double>();
            const Eigen::Vector3d w2 = r2d.transpose() * v2;
            if (std::abs(w2[0]) > tol || std::abs(w2[1]) > tol) {
                continue;
            }
            const Eigen::Matrix3d cc = r1d.transpose() * c * r2d;
            const double cos2t = w1[2];
            const double sin2t = cc(0, 0);
            Eigen::Matrix3d target = Eigen::Matrix3d::Zero();
            target(0, 0) = sin2t;
            target(1, 1) = sin2t;
            target(2, 2) = -1.0;
            if (std::abs(w2[2] + cos2t) > tol) {
                continue;
            }
            if ((cc - target).lpNorm<Eigen::Infinity>() > tol) {
                continue;
            }
            if (std::abs(cos2t * cos2t + sin2t * sin2t - 1.0) > 1e-7) {
                continue;
            }
            const double theta = 0.5 * std::atan2(sin2t, cos2t);
            const ProbabilityDistribution base = theta_family_distribution(theta);
            return rotate_six_spin(base, r1, r2);
        }
    }
    return std::nullopt;
}

/// Correlation-map sampler over a contiguous qubit range; recursion handles
/// product splits and mixtures.
inline ProbabilityDistribution sample_correlation(const CMatrix& rho_matrix, int q) {
    const double tol = 1e-9;
    if (q == 1) {
        const PauliTensorBasis basis(1);
        const Eigen::VectorXd coeff = coefficients_from_rho(basis, rho_matrix);
        return bernoulli_distribution(coeff);
    }
    // Product split across any prefix of qubits.
    for (int qa = 1; qa < q; ++qa) {
        const int qb = q - qa;
        const CMatrix ra = partial_trace_last(rho_matrix, qa, qb);
        const CMatrix rb = partial_trace_first(rho_matrix, qa, qb);
        if ((rho_matrix - kron(ra, rb)).lpNorm<Eigen::Infinity>() <= tol) {
            return join_product(sample_correlation(ra, qa), sample_correlation(rb, qb));
        }
    }
    if (q == 2) {
        if (auto dist = try_theta_image(rho_matrix)) {
            return *dist;
        }
    }
    // Mixture: decompose into eigenstates and mix their samples; only works
    // when every eigenstate is itself constructible.
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho_matrix);
    const Eigen::VectorXd evals = solver.eigenvalues();
    Eigen::VectorXd p = Eigen::VectorXd::Zero(Eigen::Index{1} << (3 * q));
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals[i] < -1e-10) {
            throw ConstructionNotFound("sample_quantum_distribution: input not positive");
        }
        if (evals[i] <= 1e-12) {
            continue;
        }
        const CMatrix pure = solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
        // Eigenstates are handled by the non-mixture constructions only, so
        // this branch cannot recurse into itself.
        ProbabilityDistribution part = [&] {
            if (q == 2) {
                for (int qa = 1; qa < q; ++qa) {
                    const CMatrix ra = partial_trace_last(pure, qa, q - qa);
                    const CMatrix rb = partial_trace_first(pure, qa, q - qa);
                    if ((pure - kron(ra, rb)).lpNorm<Eigen::Infinity>() <= tol) {
                        return join_product(sample_correlation(ra, qa),
                                            sample_correlation(rb, q - qa));
                    }
                }
                if (auto dist = try_theta_image(pure)) {
                    return *dist;
                }
                throw ConstructionNotFound(
                    "sample_quantum_distribution: eigenstate outside the supported family");
            }
            // q == 3: eigenstates must factor into supported pieces.
            for (int qa = 1; qa < q; ++qa) {
                const CMatrix ra = partial_trace_last(pure, qa, q - qa);
                const CMatrix rb = partial_trace_first(pure, qa, q - qa);
                if ((pure - kron(ra, rb)).lpNorm<Eigen::Infinity>() <= tol) {
                    return join_product(sample_correlation(ra, qa),
                                        sample_correlation(rb, q - qa));
                }
            }
            throw ConstructionNotFound(
                "sample_quantum_distribution: eigenstate outside the supported family");
        }();
        p += evals[i] * part.p;
    }
    return ProbabilityDistribution(3 * q, std::move(p));
}

}  // namespace detail

/**
 * Constructs a classical distribution whose extracted density matrix equals
 * the target.  The direct map admits every positive target (independent
 * spins).  The correlation map supports product states, the canonical
 * entangled theta family up to discrete local spin rotations, and mixtures
 * whose eigenstates fall in that family; anything else throws
 * ConstructionNotFound.  The seed is accepted for interface stability; all
 * supported constructions are deterministic.
 */
inline ProbabilityDistribution sample_quantum_distribution(const BitQuantumMap& map,
                                                           const QuantumDensityMatrix& target,
                                                           std::uint64_t seed = 0) {
    (void)seed;
    const PauliTensorBasis basis(map.Q());
    switch (map.variant()) {
        case MapVariant::Direct:
            return detail::bernoulli_distribution(target.coefficients);
        case MapVariant::DensityMatrixLinear: {
            // Supported only when the operator table coincides with the
            // direct map's spin signs, in which case the Bernoulli
            // construction applies verbatim.
            if (map.M() != basis.size()) {
                throw ConstructionNotFound(
                    "sample_quantum_distribution: no construction for this operator table");
            }
            const BitQuantumMap ref = BitQuantumMap::direct(map.Q());
            for (int z = 0; z < basis.size(); ++z) {
                if ((map.sign_vector(z) - ref.sign_vector(z)).lpNorm<Eigen::Infinity>() > 1e-12) {
                    throw ConstructionNotFound(
                        "sample_quantum_distribution: no construction for this operator table");
                }
            }
            return detail::bernoulli_distribution(target.coefficients);
        }
        case MapVariant::Correlation: {
            Eigen::SelfAdjointEigenSolver<CMatrix> solver(target.matrix);
            if (solver.eigenvalues().minCoeff() < -1e-10) {
                throw std::invalid_argument("sample_quantum_distribution: target not positive");
            }
            return detail::sample_correlation(target.matrix, map.Q());
        }
    }
    throw std::logic_error("sample_quantum_distribution: unknown variant");
}

}  // namespace isq
