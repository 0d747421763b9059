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
 * @file classical_ops.hpp
 * Classical realizations of quantum gates: deterministic unique-jump
 * (permutation) operations on spin configurations, stochastic and signed
 * linear Markov operations, a gate catalog for the supported realization
 * spaces, and extraction of the induced linear map on the quantum
 * coefficients.
 */
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gates.hpp"
#include "maps.hpp"
#include "pauli.hpp"
#include "spin.hpp"

namespace isq {

/// Icosahedral weights: the six spin directions (a,0,+-b), (+-b,a,0),
/// (0,+-b,a) are corners of an icosahedron; a^2 + b^2 = 1.
inline const double kIcosaA = std::sqrt((1.0 + std::sqrt(5.0)) / (2.0 * std::sqrt(5.0)));
inline const double kIcosaB = std::sqrt(2.0 / (5.0 + std::sqrt(5.0)));

/**
 * Action on one target spin: the target reads `sign * s_source`, optionally
 * only when another spin holds a given value (otherwise the target keeps its
 * old value).  condition_spin == 0 means unconditional.
 */
struct SpinAction {
    int source = 0;
    int sign = 1;
    int condition_spin = 0;
    int condition_value = 0;
};

/// Simultaneous per-spin transformation; actions[k-1] drives target spin k.
struct SpinTransformRule {
    int M = 0;
    std::vector<SpinAction> actions;
};

/// A deterministic bijective map of the 2^M spin configurations.
class UniqueJumpOp {
public:
    UniqueJumpOp(int m, std::vector<Eigen::Index> perm) : m_(m), perm_(std::move(perm)) {
        const Eigen::Index n = Eigen::Index{1} << m_;
        if (static_cast<Eigen::Index>(perm_.size()) != n) {
            throw std::invalid_argument("UniqueJumpOp: permutation size mismatch");
        }
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (const Eigen::Index image : perm_) {
            if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) {
                throw std::invalid_argument("UniqueJumpOp: not a bijection");
            }
            seen[static_cast<std::size_t>(image)] = true;
        }
    }

    int M() const { return m_; }
    Eigen::Index image(Eigen::Index tau) const { return perm_[static_cast<std::size_t>(tau)]; }
    const std::vector<Eigen::Index>& permutation() const { return perm_; }

    ProbabilityDistribution apply(const ProbabilityDistribution& dist) const {
        if (dist.M != m_) {
            throw std::invalid_argument("UniqueJumpOp::apply: spin count mismatch");
        }
        Eigen::VectorXd p(dist.p.size());
        for (Eigen::Index tau = 0; tau < dist.p.size(); ++tau) {
            p[perm_[static_cast<std::size_t>(tau)]] = dist.p[tau];
        }
        return ProbabilityDistribution(m_, std::move(p));
    }

    /// The permutation as a step matrix S with S(image(tau), tau) = 1.
    Eigen::MatrixXd matrix() const {
        const Eigen::Index n = Eigen::Index{1} << m_;
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index tau = 0; tau < n; ++tau) {
            s(perm_[static_cast<std::size_t>(tau)], tau) = 1.0;
        }
        return s;
    }

    UniqueJumpOp inverse() const {
        std::vector<Eigen::Index> inv(perm_.size());
        for (Eigen::Index tau = 0; tau < static_cast<Eigen::Index>(perm_.size()); ++tau) {
            inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(tau)])] = tau;
        }
        return UniqueJumpOp(m_, std::move(inv));
    }

    /// Composition: first this operation, then `next`.
    UniqueJumpOp then(const UniqueJumpOp& next) const {
        if (next.m_ != m_) {
            throw std::invalid_argument("UniqueJumpOp::then: spin count mismatch");
        }
        std::vector<Eigen::Index> composed(perm_.size());
        for (std::size_t tau = 0; tau < perm_.size(); ++tau) {
            composed[tau] = next.perm_[static_cast<std::size_t>(perm_[tau])];
        }
        return UniqueJumpOp(m_, std::move(composed));
    }

    bool operator==(const UniqueJumpOp& other) const {
        return m_ == other.m_ && perm_ == other.perm_;
    }

private:
    int m_;
    std::vector<Eigen::Index> perm_;
};

/// A linear map of probability vectors, p' = W p, with unit column sums.
/// Signed maps admit negative matrix entries; they are valid only on inputs
/// whose image stays nonnegative.
struct MarkovOp {
    int M = 0;
    Eigen::MatrixXd W;
    bool allows_signed = false;

    MarkovOp(int m, Eigen::MatrixXd w, bool is_signed = false)
        : M(m), W(std::move(w)), allows_signed(is_signed) {
        const Eigen::Index n = Eigen::Index{1} << M;
        if (W.rows() != n || W.cols() != n) {
            throw std::invalid_argument("MarkovOp: size mismatch");
        }
        for (Eigen::Index col = 0; col < n; ++col) {
            if (std::abs(W.col(col).sum() - 1.0) > 1e-9) {
                throw std::invalid_argument("MarkovOp: column sums must be 1");
            }
        }
        if (!allows_signed && W.minCoeff() < -1e-12) {
            throw std::invalid_argument("MarkovOp: negative entry without signed flag");
        }
    }

    static MarkovOp from_jump(const UniqueJumpOp& jump) {
        return MarkovOp(jump.M(), jump.matrix(), false);
    }
};

/// Builds the configuration permutation realizing a simultaneous spin
/// transformation; throws if the rule is not bijective.
inline UniqueJumpOp rule_to_permutation(const SpinTransformRule& rule) {
    const int m = rule.M;
    if (static_cast<int>(rule.actions.size()) != m) {
        throw std::invalid_argument("rule_to_permutation: need one action per spin");
    }
    const Eigen::Index n = Eigen::Index{1} << m;
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index tau = 0; tau < n; ++tau) {
        Eigen::Index out = 0;
        for (int target = 1; target <= m; ++target) {
            const SpinAction& act = rule.actions[static_cast<std::size_t>(target - 1)];
            int value;
            if (act.condition_spin != 0 &&
                spin_value(tau, m, act.condition_spin) != act.condition_value) {
                value = spin_value(tau, m, target);
            } else {
                value = act.sign * spin_value(tau, m, act.source);
            }
            out = (out << 1) | (value > 0 ? 1 : 0);
        }
        perm[static_cast<std::size_t>(tau)] = out;
    }
    return UniqueJumpOp(m, std::move(perm));
}

/// Applies a Markov operation; a signed map whose output has a genuinely
/// negative entry is rejected (the input was outside the map's domain).
inline ProbabilityDistribution apply_markov(const MarkovOp& op,
                                            const ProbabilityDistribution& dist) {
    if (dist.M != op.M) {
        throw std::invalid_argument("apply_markov: spin count mismatch");
    }
    Eigen::VectorXd p = op.W * dist.p;
    if (p.minCoeff() < -1e-12) {
        throw std::domain_error("apply_markov: signed map produced a negative probability");
    }
    return ProbabilityDistribution(op.M, std::move(p));
}

/// Raw matrix application without the probability validation; used for
/// coefficient-level analysis of signed maps, where the extracted
/// coefficients are linear and remain meaningful.
inline Eigen::VectorXd apply_markov_raw(const MarkovOp& op, const Eigen::VectorXd& p) {
    if (p.size() != op.W.cols()) {
        throw std::invalid_argument("apply_markov_raw: size mismatch");
    }
    return op.W * p;
}

/**
 * Signed three-spin map realizing the pi/4 rotation of (rho_1, rho_2): the
 * block sums p_1+p_2-p_7-p_8 and p_3+p_4-p_5-p_6 are rotated by -45 degrees
 * while the differences p_1-p_2, p_3-p_4, p_5-p_6, p_7-p_8 and the block
 * totals are left unchanged, which keeps rho_3 fixed.  Some matrix entries
 * are necessarily negative; the map leaves the probability simplex for some
 * valid quantum inputs, so validated application is domain-limited.
 */
inline MarkovOp t_gate_signed_map() {
    const double is2 = 1.0 / std::numbers::sqrt2;
    auto step = [&](const Eigen::VectorXd& p) {
        const double u = p[0] + p[1] - p[6] - p[7];
        const double v = p[2] + p[3] - p[4] - p[5];
        const double a = p[0] + p[1] + p[6] + p[7];
        const double b = p[2] + p[3] + p[4] + p[5];
        const double d1 = p[0] - p[1];
        const double d2 = p[2] - p[3];
        const double d3 = p[4] - p[5];
        const double d4 = p[6] - p[7];
        const double up = is2 * (u + v);
        const double vp = is2 * (v - u);
        Eigen::VectorXd out(8);
        out[0] = 0.5 * (0.5 * (a + up) + d1);
        out[1] = 0.5 * (0.5 * (a + up) - d1);
        out[2] = 0.5 * (0.5 * (b + vp) + d2);
        out[3] = 0.5 * (0.5 * (b + vp) - d2);
        out[4] = 0.5 * (0.5 * (b - vp) + d3);
        out[5] = 0.5 * (0.5 * (b - vp) - d3);
        out[6] = 0.5 * (0.5 * (a - up) + d4);
        out[7] = 0.5 * (0.5 * (a - up) - d4);
        return out;
    };
    Eigen::MatrixXd w(8, 8);
    for (int col = 0; col < 8; ++col) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(8);
        e[col] = 1.0;
        w.col(col) = step(e);
    }
    return MarkovOp(3, std::move(w), /*is_signed=*/true);
}

/// Coefficient rotation induced by a single-qubit gate: R_kj = tr(tau_k U
/// tau_j U^dagger)/2.  For the catalog gates this is a signed permutation;
/// CONJ (complex conjugation) flips rho_2.
inline Eigen::Matrix3d single_qubit_coefficient_rotation(GateName g) {
    if (g == GateName::CONJ) {
        Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
        r(1, 1) = -1.0;
        return r;
    }
    if (gate_arity(g) != 1) {
        throw std::invalid_argument("single_qubit_coefficient_rotation: not a one-qubit gate");
    }
    const CMatrix u = gate_matrix(g);
    Eigen::Matrix3d r;
    for (int k = 1; k <= 3; ++k) {
        for (int j = 1; j <= 3; ++j) {
            r(k - 1, j - 1) = 0.5 * (pauli_matrix(k) * u * pauli_matrix(j) * u.adjoint())
                                        .trace()
                                        .real();
        }
    }
    return r;
}

/// Rounds a coefficient rotation to an integer signed permutation; empty if
/// it is not one (e.g. the T gate).
inline std::optional<Eigen::Matrix3i> signed_permutation_from_rotation(const Eigen::Matrix3d& r) {
    Eigen::Matrix3i out;
    for (int i = 0; i < 3; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            const double v = r(i, j);
            if (std::abs(v) < 1e-9) {
                out(i, j) = 0;
            } else if (std::abs(std::abs(v) - 1.0) < 1e-9) {
                out(i, j) = v > 0 ? 1 : -1;
                ++nonzero;
            } else {
                return std::nullopt;
            }
        }
        if (nonzero != 1) {
            return std::nullopt;
        }
    }
    return out;
}

/// The supported classical realization spaces.
enum class RealizationMap {
    Direct3,       ///< one qubit, spins (s1, s2, s3)
    Direct15,      ///< two qubits, one spin per Pauli coefficient
    Correlation6,  ///< two qubits, three spins each, cross-correlations
    Signed3,       ///< one qubit, three spins, signed linear maps allowed
    Extended4,     ///< one qubit (rho_2 = 0), spins (s1, s3, s13+, s13-)
    Icosa6         ///< one qubit, six icosahedron-direction spins
};

/// A gate realized classically: either a permutation or a (possibly signed)
/// linear map.
struct Realization {
    std::variant<UniqueJumpOp, MarkovOp> op;

    ProbabilityDistribution apply(const ProbabilityDistribution& dist) const {
        if (const auto* jump = std::get_if<UniqueJumpOp>(&op)) {
            return jump->apply(dist);
        }
        return apply_markov(std::get<MarkovOp>(op), dist);
    }

    Eigen::VectorXd apply_raw(const Eigen::VectorXd& p) const {
        if (const auto* jump = std::get_if<UniqueJumpOp>(&op)) {
            Eigen::VectorXd out(p.size());
            for (Eigen::Index tau = 0; tau < p.size(); ++tau) {
                out[jump->image(tau)] = p[tau];
            }
            return out;
        }
        return apply_markov_raw(std::get<MarkovOp>(op), p);
    }

    int spin_count() const {
        if (const auto* jump = std::get_if<UniqueJumpOp>(&op)) {
            return jump->M();
        }
        return std::get<MarkovOp>(op).M;
    }
};

inline int realization_spin_count(RealizationMap map) {
    switch (map) {
        case RealizationMap::Direct3:
        case RealizationMap::Signed3: return 3;
        case RealizationMap::Direct15: return 15;
        case RealizationMap::Correlation6: return 6;
        case RealizationMap::Extended4: return 4;
        case RealizationMap::Icosa6: return 6;
    }
    throw std::logic_error("realization_spin_count: unknown map");
}

inline int realization_coeff_dim(RealizationMap map) {
    switch (map) {
        case RealizationMap::Direct3:
        case RealizationMap::Signed3:
        case RealizationMap::Icosa6: return 3;
        case RealizationMap::Direct15:
        case RealizationMap::Correlation6: return 15;
        case RealizationMap::Extended4: return 2;
    }
    throw std::logic_error("realization_coeff_dim: unknown map");
}

/// Extracts the quantum coefficients from a raw probability vector (linear,
/// hence meaningful also on signed intermediate vectors).
inline Eigen::VectorXd realization_extract_raw(RealizationMap map, const Eigen::VectorXd& p) {
    const int m = realization_spin_count(map);
    if (p.size() != (Eigen::Index{1} << m)) {
        throw std::invalid_argument("realization_extract_raw: size mismatch");
    }
    auto mean = [&](int gamma) {
        double acc = 0.0;
        for (Eigen::Index tau = 0; tau < p.size(); ++tau) {
            acc += p[tau] * spin_value(tau, m, gamma);
        }
        return acc;
    };
    switch (map) {
        case RealizationMap::Direct3:
        case RealizationMap::Signed3: {
            Eigen::VectorXd c(3);
            c << mean(1), mean(2), mean(3);
            return c;
        }
        case RealizationMap::Direct15: {
            Eigen::VectorXd c(15);
            for (int z = 0; z < 15; ++z) {
                c[z] = mean(z + 1);
            }
            return c;
        }
        case RealizationMap::Correlation6: {
            const BitQuantumMap bmap = BitQuantumMap::correlation(2);
            Eigen::VectorXd c(15);
            for (int z = 0; z < 15; ++z) {
                c[z] = bmap.sign_vector(z).dot(p);
            }
            return c;
        }
        case RealizationMap::Extended4: {
            Eigen::VectorXd c(2);
            c << mean(1), mean(2);
            return c;
        }
        case RealizationMap::Icosa6: {
            Eigen::VectorXd c(3);
            c << (mean(1) + mean(2)) / (2.0 * kIcosaA), (mean(3) + mean(4)) / (2.0 * kIcosaA),
                (mean(5) + mean(6)) / (2.0 * kIcosaA);
            return c;
        }
    }
    throw std::logic_error("realization_extract_raw: unknown map");
}

inline Eigen::VectorXd realization_extract(RealizationMap map,
                                           const ProbabilityDistribution& dist) {
    return realization_extract_raw(map, dist.p);
}

/// Canonical distribution realizing given coefficients: independent spins
/// with the means each realization space prescribes; the correlation space
/// delegates to the constructive sampler.
inline ProbabilityDistribution realization_sample(RealizationMap map,
                                                  const Eigen::VectorXd& coeff) {
    if (coeff.size() != realization_coeff_dim(map)) {
        throw std::invalid_argument("realization_sample: coefficient size mismatch");
    }
    switch (map) {
        case RealizationMap::Direct3:
        case RealizationMap::Signed3:
        case RealizationMap::Direct15:
            return detail::bernoulli_distribution(coeff);
        case RealizationMap::Correlation6: {
            const PauliTensorBasis basis(2);
            const auto target = rho_from_coefficients(basis, coeff);
            return sample_quantum_distribution(BitQuantumMap::correlation(2), target);
        }
        case RealizationMap::Extended4: {
            const double is2 = 1.0 / std::numbers::sqrt2;
            Eigen::VectorXd means(4);
            means << coeff[0], coeff[1], is2 * (coeff[0] + coeff[1]), is2 * (coeff[0] - coeff[1]);
            return detail::bernoulli_distribution(means);
        }
        case RealizationMap::Icosa6: {
            const double a = kIcosaA;
            const double b = kIcosaB;
            Eigen::VectorXd means(6);
            means << a * coeff[0] + b * coeff[2], a * coeff[0] - b * coeff[2],
                a * coeff[1] + b * coeff[0], a * coeff[1] - b * coeff[0],
                a * coeff[2] + b * coeff[1], a * coeff[2] - b * coeff[1];
            return detail::bernoulli_distribution(means);
        }
    }
    throw std::logic_error("realization_sample: unknown map");
}

namespace detail {

/// Unconditional per-spin rule from a signed spin permutation acting on a
/// block of spins [offset+1, offset+3] inside an M-spin system.
inline void fill_block_rule(SpinTransformRule& rule, int offset, const Eigen::Matrix3i& r) {
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) {
            if (r(k, j) != 0) {
                rule.actions[static_cast<std::size_t>(offset + k)] = {offset + j + 1, r(k, j), 0,
                                                                      0};
            }
        }
    }
}

inline SpinTransformRule identity_rule(int m) {
    SpinTransformRule rule{m, {}};
    rule.actions.resize(static_cast<std::size_t>(m));
    for (int g = 1; g <= m; ++g) {
        rule.actions[static_cast<std::size_t>(g - 1)] = {g, 1, 0, 0};
    }
    return rule;
}

}  // namespace detail

/**
 * Catalog of classical gate realizations per realization space.  Returns
 * std::nullopt when the combination is not realizable (e.g. CNOT under the
 * correlation space, or the T gate as a unique jump).
 */
inline std::optional<Realization> gate_realization(const GateSpec& spec, RealizationMap map) {
    const GateName g = spec.name;
    const int arity = gate_arity(g);
    const bool one_qubit_space = map == RealizationMap::Direct3 || map == RealizationMap::Signed3 ||
                                 map == RealizationMap::Extended4 || map == RealizationMap::Icosa6;
    if (arity == 2 && one_qubit_space) {
        return std::nullopt;
    }
    if (arity == 1 && one_qubit_space && !(spec.targets.size() == 1 && spec.targets[0] == 1)) {
        throw std::invalid_argument("gate_realization: one-qubit space targets must be {1}");
    }
    switch (map) {
        case RealizationMap::Direct3: {
            const auto r = [&]() -> std::optional<Eigen::Matrix3i> {
                if (g == GateName::CONJ) {
                    return signed_permutation_from_rotation(
                        single_qubit_coefficient_rotation(GateName::CONJ));
                }
                if (arity != 1) {
                    return std::nullopt;
                }
                return signed_permutation_from_rotation(single_qubit_coefficient_rotation(g));
            }();
            if (!r) {
                return std::nullopt;  // T and PI4_31 are not spin exchanges here.
            }
            SpinTransformRule rule = detail::identity_rule(3);
            detail::fill_block_rule(rule, 0, *r);
            return Realization{rule_to_permutation(rule)};
        }
        case RealizationMap::Signed3: {
            if (g == GateName::T) {
                return Realization{t_gate_signed_map()};
            }
            return gate_realization(spec, RealizationMap::Direct3);
        }
        case RealizationMap::Extended4: {
            SpinTransformRule rule = detail::identity_rule(4);
            // Spin order: (s1, s3, s13+, s13-).
            switch (g) {
                case GateName::PI4_31:
                    rule.actions = {{4, 1}, {3, 1}, {1, 1}, {2, -1}};
                    break;
                case GateName::U31:
                    rule.actions = {{2, -1}, {1, 1}, {4, 1}, {3, -1}};
                    break;
                case GateName::UY:
                    rule.actions = {{1, -1}, {2, -1}, {3, -1}, {4, -1}};
                    break;
                case GateName::UZ:
                    rule.actions = {{1, -1}, {2, 1}, {4, -1}, {3, -1}};
                    break;
                case GateName::UX:
                    rule.actions = {{1, 1}, {2, -1}, {4, 1}, {3, 1}};
                    break;
                case GateName::H:
                    rule.actions = {{2, 1}, {1, 1}, {3, 1}, {4, -1}};
                    break;
                default: return std::nullopt;
            }
            return Realization{rule_to_permutation(rule)};
        }
        case RealizationMap::Icosa6: {
            SpinTransformRule rule = detail::identity_rule(6);
            // Spin order: (s1+, s1-, s2+, s2-, s3+, s3-).
            switch (g) {
                case GateName::UY:
                    rule.actions = {{1, -1}, {2, -1}, {4, 1}, {3, 1}, {6, -1}, {5, -1}};
                    break;
                case GateName::UX:
                    rule.actions = {{2, 1}, {1, 1}, {4, -1}, {3, -1}, {5, -1}, {6, -1}};
                    break;
                case GateName::UZ:
                    rule.actions = {{2, -1}, {1, -1}, {3, -1}, {4, -1}, {6, 1}, {5, 1}};
                    break;
                case GateName::CONJ:
                    rule.actions = {{1, 1}, {2, 1}, {4, -1}, {3, -1}, {6, 1}, {5, 1}};
                    break;
                default: return std::nullopt;  // pi/2-rotations need 2pi/5 replacements.
            }
            return Realization{rule_to_permutation(rule)};
        }
        case RealizationMap::Direct15: {
            const PauliTensorBasis basis(2);
            SpinTransformRule rule = detail::identity_rule(15);
            auto spin_of = [&](int mu1, int mu2) { return basis.flat_index({mu1, mu2}) + 1; };
            if (g == GateName::CNOT) {
                if (spec.targets != std::vector<int>{1, 2}) {
                    throw std::invalid_argument("gate_realization: CNOT supports targets {1,2}");
                }
                auto pair = [&](int a1, int a2, int b1, int b2, int sign) {
                    rule.actions[static_cast<std::size_t>(spin_of(a1, a2) - 1)] = {
                        spin_of(b1, b2), sign, 0, 0};
                    rule.actions[static_cast<std::size_t>(spin_of(b1, b2) - 1)] = {
                        spin_of(a1, a2), sign, 0, 0};
                };
                pair(1, 0, 1, 1, 1);
                pair(2, 0, 2, 1, 1);
                pair(1, 3, 2, 2, -1);
                pair(0, 2, 3, 2, 1);
                pair(0, 3, 3, 3, 1);
                pair(2, 3, 1, 2, 1);
                return Realization{rule_to_permutation(rule)};
            }
            if (g == GateName::SWAP) {
                for (int mu = 0; mu <= 3; ++mu) {
                    for (int nu = 0; nu <= 3; ++nu) {
                        if (mu == 0 && nu == 0) {
                            continue;
                        }
                        rule.actions[static_cast<std::size_t>(spin_of(mu, nu) - 1)] = {
                            spin_of(nu, mu), 1, 0, 0};
                    }
                }
                return Realization{rule_to_permutation(rule)};
            }
            if (g == GateName::CONJ) {
                for (int z = 0; z < 15; ++z) {
                    const auto mu = basis.multi_index(z);
                    const int twos = (mu[0] == 2 ? 1 : 0) + (mu[1] == 2 ? 1 : 0);
                    rule.actions[static_cast<std::size_t>(z)] = {z + 1, twos % 2 == 0 ? 1 : -1, 0,
                                                                 0};
                }
                return Realization{rule_to_permutation(rule)};
            }
            if (arity == 1) {
                if (spec.targets.size() != 1 ||
                    (spec.targets[0] != 1 && spec.targets[0] != 2)) {
                    throw std::invalid_argument("gate_realization: target must be 1 or 2");
                }
                const auto r =
                    signed_permutation_from_rotation(single_qubit_coefficient_rotation(g));
                if (!r) {
                    return std::nullopt;
                }
                const int t = spec.targets[0];
                for (int k = 1; k <= 3; ++k) {
                    for (int other = 0; other <= 3; ++other) {
                        for (int j = 1; j <= 3; ++j) {
                            if ((*r)(k - 1, j - 1) != 0) {
                                const int target =
                                    t == 1 ? spin_of(k, other) : spin_of(other, k);
                                const int source =
                                    t == 1 ? spin_of(j, other) : spin_of(other, j);
                                rule.actions[static_cast<std::size_t>(target - 1)] = {
                                    source, (*r)(k - 1, j - 1), 0, 0};
                            }
                        }
                    }
                }
                return Realization{rule_to_permutation(rule)};
            }
            return std::nullopt;
        }
        case RealizationMap::Correlation6: {
            SpinTransformRule rule = detail::identity_rule(6);
            if (g == GateName::CNOT) {
                return std::nullopt;  // no unique-jump construction is known.
            }
            if (g == GateName::SWAP) {
                for (int k = 0; k < 3; ++k) {
                    rule.actions[static_cast<std::size_t>(k)] = {3 + k + 1, 1, 0, 0};
                    rule.actions[static_cast<std::size_t>(3 + k)] = {k + 1, 1, 0, 0};
                }
                return Realization{rule_to_permutation(rule)};
            }
            if (g == GateName::CONJ) {
                rule.actions[1] = {2, -1, 0, 0};
                rule.actions[4] = {5, -1, 0, 0};
                return Realization{rule_to_permutation(rule)};
            }
            if (arity == 1) {
                if (spec.targets.size() != 1 ||
                    (spec.targets[0] != 1 && spec.targets[0] != 2)) {
                    throw std::invalid_argument("gate_realization: target must be 1 or 2");
                }
                const auto r =
                    signed_permutation_from_rotation(single_qubit_coefficient_rotation(g));
                if (!r) {
                    return std::nullopt;
                }
                detail::fill_block_rule(rule, spec.targets[0] == 1 ? 0 : 3, *r);
                return Realization{rule_to_permutation(rule)};
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("gate_realization: unknown map");
}

/// Rotation by 2 pi / 5 around the icosahedron corner (a, 0, b); together
/// with the reflections it generates the icosahedral rotation group.
inline Eigen::Matrix3d icosahedral_r5_matrix() {
    const Eigen::Vector3d axis(kIcosaA, 0.0, kIcosaB);
    const double angle = 2.0 * std::numbers::pi / 5.0;
    return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

/// The 2 pi / 5 rotation as a unique jump on the six icosahedron spins.
inline UniqueJumpOp icosahedral_r5_rotation() {
    const Eigen::Matrix3d r = icosahedral_r5_matrix();
    const double a = kIcosaA;
    const double b = kIcosaB;
    const std::vector<Eigen::Vector3d> dirs = {
        {a, 0.0, b}, {a, 0.0, -b}, {b, a, 0.0}, {-b, a, 0.0}, {0.0, b, a}, {0.0, -b, a}};
    SpinTransformRule rule = detail::identity_rule(6);
    for (int k = 0; k < 6; ++k) {
        // New spin k measures along direction d_k in the rotated state, i.e.
        // along R^T d_k in the old one; that axis is +-1 times another corner.
        const Eigen::Vector3d pulled = r.transpose() * dirs[static_cast<std::size_t>(k)];
        bool found = false;
        for (int j = 0; j < 6 && !found; ++j) {
            for (int sign : {1, -1}) {
                if ((pulled - sign * dirs[static_cast<std::size_t>(j)]).norm() < 1e-9) {
                    rule.actions[static_cast<std::size_t>(k)] = {j + 1, sign, 0, 0};
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            throw std::logic_error("icosahedral_r5_rotation: axis not mapped to a corner");
        }
    }
    return rule_to_permutation(rule);
}

/// Result of fitting a linear coefficient map rho' = b rho.
struct InducedMapResult {
    bool closed = false;
    Eigen::MatrixXd b;
    double residual = 0.0;
};

/**
 * Fits the induced linear map on the quantum coefficients over a spanning
 * sample of quantum-constrained distributions, including environment-only
 * perturbed duplicates.  Reports not-closed (closed = false) when the
 * residual exceeds 1e-9 or when distributions with equal coefficients map to
 * different images (environment dependence).
 */
inline InducedMapResult induced_coefficient_map(const Realization& op, RealizationMap map) {
    const int d = realization_coeff_dim(map);
    const int m = realization_spin_count(map);
    if (op.spin_count() != m) {
        throw std::invalid_argument("induced_coefficient_map: spin count mismatch");
    }
    std::vector<Eigen::VectorXd> samples;
    std::mt19937 rng(20240817);
    std::normal_distribution<double> normal(0.0, 1.0);
    if (map == RealizationMap::Correlation6) {
        // Product states span the full 15-dimensional coefficient space.
        auto push_product = [&](const Eigen::Vector3d& v1, const Eigen::Vector3d& v2) {
            const PauliTensorBasis basis(2);
            Eigen::VectorXd c = Eigen::VectorXd::Zero(15);
            for (int k = 1; k <= 3; ++k) {
                c[basis.flat_index({k, 0})] = v1[k - 1];
                c[basis.flat_index({0, k})] = v2[k - 1];
                for (int l = 1; l <= 3; ++l) {
                    c[basis.flat_index({k, l})] = v1[k - 1] * v2[l - 1];
                }
            }
            samples.push_back(c);
        };
        for (int i = 0; i < 3; ++i) {
            Eigen::Vector3d e = Eigen::Vector3d::Zero();
            e[i] = 0.6;
            push_product(e, Eigen::Vector3d::Zero());
            push_product(Eigen::Vector3d::Zero(), e);
        }
        for (int trial = 0; trial < 30; ++trial) {
            Eigen::Vector3d v1(normal(rng), normal(rng), normal(rng));
            Eigen::Vector3d v2(normal(rng), normal(rng), normal(rng));
            v1 *= 0.7 / std::max(1.0, v1.norm());
            v2 *= 0.7 / std::max(1.0, v2.norm());
            push_product(v1, v2);
        }
    } else {
        const double radius = map == RealizationMap::Signed3 ? 0.3 : 0.6;
        for (int i = 0; i < d; ++i) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
            e[i] = radius;
            samples.push_back(e);
        }
        for (int trial = 0; trial < d + 10; ++trial) {
            Eigen::VectorXd v(d);
            for (int i = 0; i < d; ++i) {
                v[i] = normal(rng);
            }
            v *= radius / std::max(1.0, v.norm());
            samples.push_back(v);
        }
    }
    const Eigen::Index n_states = Eigen::Index{1} << m;
    // Character along spins 1 and 2: never part of any observable table here.
    Eigen::VectorXd chi(n_states);
    for (Eigen::Index tau = 0; tau < n_states; ++tau) {
        chi[tau] = spin_value(tau, m, 1) * spin_value(tau, m, 2);
    }
    const double delta = 0.05 / static_cast<double>(n_states);
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n_states, 1.0 / n_states);

    Eigen::MatrixXd x(d, static_cast<Eigen::Index>(samples.size()));
    Eigen::MatrixXd y(d, static_cast<Eigen::Index>(samples.size()));
    bool environment_consistent = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const ProbabilityDistribution dist = realization_sample(map, samples[i]);
        const Eigen::VectorXd damped = 0.9 * dist.p + 0.1 * uniform;
        const Eigen::VectorXd out = op.apply_raw(damped);
        const Eigen::VectorXd out_env = op.apply_raw(damped + delta * chi);
        x.col(static_cast<Eigen::Index>(i)) = realization_extract_raw(map, damped);
        y.col(static_cast<Eigen::Index>(i)) = realization_extract_raw(map, out);
        if ((realization_extract_raw(map, out_env) - y.col(static_cast<Eigen::Index>(i)))
                .lpNorm<Eigen::Infinity>() > 1e-9) {
            environment_consistent = false;
        }
    }
    // Least-squares fit of b in b * x = y.
    const Eigen::MatrixXd bt = x.transpose().colPivHouseholderQr().solve(y.transpose());
    InducedMapResult result;
    result.b = bt.transpose();
    result.residual = (result.b * x - y).lpNorm<Eigen::Infinity>();
    result.closed = environment_consistent && result.residual <= 1e-9;
    return result;
}

/// Eigenvalue report for a Markov operation: full spectrum, the leading
/// (unit-modulus) subset, and the smallest power at which the operation is
/// the identity, when one exists.
struct SpectrumReport {
    Eigen::VectorXcd eigenvalues;
    std::vector<int> leading_indices;
    std::optional<int> period;
};

inline SpectrumReport spectrum_period(const MarkovOp& op, int max_period = 4096) {
    SpectrumReport report;
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(op.W);
    report.eigenvalues = solver.eigenvalues();
    for (Eigen::Index i = 0; i < report.eigenvalues.size(); ++i) {
        if (std::abs(report.eigenvalues[i]) >= 1.0 - 1e-9) {
            report.leading_indices.push_back(static_cast<int>(i));
        }
    }
    Eigen::MatrixXd power = op.W;
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(op.W.rows(), op.W.cols());
    for (int h = 1; h <= max_period; ++h) {
        if ((power - identity).lpNorm<Eigen::Infinity>() <= 1e-8) {
            report.period = h;
            break;
        }
        power = op.W * power;
    }
    return report;
}

}  // namespace isq
