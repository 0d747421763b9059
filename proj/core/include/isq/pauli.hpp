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
 * @file pauli.hpp
 * Pauli tensor-product basis for Q qubits, quantum density matrices
 * parameterized by their basis coefficients, and the antisymmetric /
 * symmetric structure coefficients of the generator algebra.
 */
#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace isq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CMatrix2 = Eigen::Matrix2cd;

/// Single-qubit Pauli matrix tau_mu, with tau_0 the identity.
inline CMatrix2 pauli_matrix(int mu) {
    CMatrix2 m;
    switch (mu) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument("pauli_matrix: index must be 0..3");
    }
    return m;
}

/// Kronecker product of two complex matrices.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/**
 * @brief Tensor-product generator basis L_z for Q qubits.
 *
 * L_{mu_1...mu_Q} = tau_{mu_1} x ... x tau_{mu_Q} with mu_i in {0,1,2,3},
 * excluding the all-zero identity. The flat index z runs over 1..4^Q-1 in
 * lexicographic order of (mu_1,...,mu_Q); internally we store it 0-based,
 * so generator(z) with z in [0, 4^Q-2] corresponds to the multi-index whose
 * base-4 value is z+1.
 */
class PauliTensorBasis {
  public:
    explicit PauliTensorBasis(int Q) : Q_(Q) {
        if (Q < 1 || Q > 3) {
            throw std::invalid_argument("PauliTensorBasis: Q must be 1..3");
        }
        const int count = size();
        generators_.reserve(static_cast<std::size_t>(count));
        for (int z = 0; z < count; ++z) {
            const auto mu = multi_index(z);
            CMatrix m = pauli_matrix(mu[0]);
            for (int i = 1; i < Q_; ++i) {
                m = kron(m, pauli_matrix(mu[static_cast<std::size_t>(i)]));
            }
            generators_.push_back(std::move(m));
        }
    }

    [[nodiscard]] int qubits() const { return Q_; }
    /// Number of generators, 4^Q - 1.
    [[nodiscard]] int size() const { return (1 << (2 * Q_)) - 1; }
    /// Hilbert-space dimension 2^Q.
    [[nodiscard]] int dim() const { return 1 << Q_; }

    /// Multi-index (mu_1,...,mu_Q) of the 0-based flat index z.
    [[nodiscard]] std::vector<int> multi_index(int z) const {
        if (z < 0 || z >= size()) {
            throw std::invalid_argument("PauliTensorBasis: flat index out of range");
        }
        std::vector<int> mu(static_cast<std::size_t>(Q_));
        int v = z + 1;  // base-4 value; zero is the excluded identity
        for (int i = Q_ - 1; i >= 0; --i) {
            mu[static_cast<std::size_t>(i)] = v % 4;
            v /= 4;
        }
        return mu;
    }

    /// 0-based flat index of a multi-index (throws on the all-zero identity).
    [[nodiscard]] int flat_index(std::span<const int> mu) const {
        if (static_cast<int>(mu.size()) != Q_) {
            throw std::invalid_argument("PauliTensorBasis: multi-index length != Q");
        }
        int v = 0;
        for (int m : mu) {
            if (m < 0 || m > 3) {
                throw std::invalid_argument("PauliTensorBasis: multi-index entry out of range");
            }
            v = 4 * v + m;
        }
        if (v == 0) {
            throw std::invalid_argument("PauliTensorBasis: identity has no flat index");
        }
        return v - 1;
    }

    [[nodiscard]] int flat_index(std::initializer_list<int> mu) const {
        return flat_index(std::span<const int>(mu.begin(), mu.size()));
    }

    [[nodiscard]] const CMatrix& generator(int z) const {
        if (z < 0 || z >= size()) {
            throw std::invalid_argument("PauliTensorBasis: flat index out of range");
        }
        return generators_[static_cast<std::size_t>(z)];
    }

  private:
    int Q_;
    std::vector<CMatrix> generators_;
};

/**
 * @brief Hermitian trace-one density matrix of Q qubits.
 *
 * Stored both as a matrix and as the real coefficient vector rho_z of the
 * expansion rho = 2^{-Q} (1 + rho_z L_z).
 */
struct QuantumDensityMatrix {
    int Q = 0;
    CMatrix matrix;
    Eigen::VectorXd coefficients;
};

/// Assemble rho = 2^{-Q} (1 + rho_z L_z) from its coefficient vector.
inline QuantumDensityMatrix rho_from_coefficients(const PauliTensorBasis& basis,
                                                  const Eigen::VectorXd& rho_z) {
    if (rho_z.size() != basis.size()) {
        throw std::invalid_argument("rho_from_coefficients: wrong coefficient count");
    }
    const int d = basis.dim();
    CMatrix m = CMatrix::Identity(d, d);
    for (int z = 0; z < basis.size(); ++z) {
        m += rho_z[z] * basis.generator(z);
    }
    m /= static_cast<double>(d);
    return {basis.qubits(), std::move(m), rho_z};
}

/// Extract the coefficient vector rho_z = Re tr(L_z rho) from a matrix.
inline Eigen::VectorXd coefficients_from_rho(const PauliTensorBasis& basis,
                                             const CMatrix& rho) {
    if (rho.rows() != basis.dim() || rho.cols() != basis.dim()) {
        throw std::invalid_argument("coefficients_from_rho: dimension mismatch");
    }
    Eigen::VectorXd out(basis.size());
    for (int z = 0; z < basis.size(); ++z) {
        out[z] = (basis.generator(z) * rho).trace().real();
    }
    return out;
}

/// Wrap a Hermitian trace-one matrix as a QuantumDensityMatrix.
inline QuantumDensityMatrix rho_from_matrix(const PauliTensorBasis& basis,
                                            const CMatrix& rho,
                                            double tol = 1e-12) {
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9) {
        throw std::invalid_argument("rho_from_matrix: trace must be 1");
    }
    if ((rho - rho.adjoint()).norm() > 1e-7) {
        throw std::invalid_argument("rho_from_matrix: matrix must be Hermitian");
    }
    (void)tol;
    return {basis.qubits(), rho, coefficients_from_rho(basis, rho)};
}

/// Density matrix of a pure state psi (normalized internally).
inline QuantumDensityMatrix rho_from_state(const PauliTensorBasis& basis,
                                           const Eigen::VectorXcd& psi) {
    if (psi.size() != basis.dim()) {
        throw std::invalid_argument("rho_from_state: dimension mismatch");
    }
    const double n2 = psi.squaredNorm();
    if (n2 <= 0.0) {
        throw std::invalid_argument("rho_from_state: zero vector");
    }
    CMatrix rho = (psi * psi.adjoint()) / n2;
    return rho_from_matrix(basis, rho);
}

/**
 * @brief Structure coefficients of the generator algebra.
 *
 * f(z,y,w): antisymmetric coefficients with [L_z, L_y] = 2 i f_{zyw} L_w.
 * d(z,y,w): symmetric coefficients with {L_z, L_y} = 2 delta_{zy} + 2 d_{zyw} L_w.
 */
class StructureCoefficients {
  public:
    explicit StructureCoefficients(const PauliTensorBasis& basis)
        : n_(basis.size()), f_(static_cast<std::size_t>(n_) * n_ * n_, 0.0),
          d_(static_cast<std::size_t>(n_) * n_ * n_, 0.0) {
        const double dim = static_cast<double>(basis.dim());
        for (int z = 0; z < n_; ++z) {
            for (int y = 0; y < n_; ++y) {
                const CMatrix prod = basis.generator(z) * basis.generator(y);
                const CMatrix comm = prod - basis.generator(y) * basis.generator(z);
                const CMatrix anti = prod + basis.generator(y) * basis.generator(z);
                for (int w = 0; w < n_; ++w) {
                    // Project on L_w using tr(L_w L_x) = 2^Q delta_{wx}.
                    const Complex cf =
                        (basis.generator(w) * comm).trace() / (2.0 * Complex(0, 1) * dim);
                    const Complex cd = (basis.generator(w) * anti).trace() / (2.0 * dim);
                    f_[idx(z, y, w)] = cf.real();
                    d_[idx(z, y, w)] = cd.real();
                }
            }
        }
    }

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] double f(int z, int y, int w) const { return f_[idx(z, y, w)]; }
    [[nodiscard]] double d(int z, int y, int w) const { return d_[idx(z, y, w)]; }

  private:
    [[nodiscard]] std::size_t idx(int z, int y, int w) const {
        return (static_cast<std::size_t>(z) * n_ + y) * n_ + w;
    }
    int n_;
    std::vector<double> f_;
    std::vector<double> d_;
};

/// Serialize a density matrix to JSON {"Q": int, "re": [[..]], "im": [[..]]}.
inline nlohmann::json to_json(const QuantumDensityMatrix& rho) {
    const auto d = rho.matrix.rows();
    std::vector<std::vector<double>> re(static_cast<std::size_t>(d)),
        im(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            re[static_cast<std::size_t>(i)].push_back(rho.matrix(i, j).real());
            im[static_cast<std::size_t>(i)].push_back(rho.matrix(i, j).imag());
        }
    }
    return nlohmann::json{{"Q", rho.Q}, {"re", re}, {"im", im}};
}

/// Parse a density matrix from the JSON emitted by to_json.
inline QuantumDensityMatrix rho_from_json(const nlohmann::json& j) {
    const int Q = j.at("Q").get<int>();
    PauliTensorBasis basis(Q);
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    const int d = basis.dim();
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d) {
        throw std::invalid_argument("rho_from_json: dimension mismatch");
    }
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int jj = 0; jj < d; ++jj) {
            m(i, jj) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)],
                               im[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
        }
    }
    return rho_from_matrix(basis, m);
}

}  // namespace isq
