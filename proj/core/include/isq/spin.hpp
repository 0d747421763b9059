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
 * @file spin.hpp
 * Bit-level state space for systems of M classical Ising spins: spin
 * configurations, probability distributions over the 2^M configurations,
 * classical wave functions, and classical correlation functions.
 */
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace isq {

/// Tolerance below which a negative probability counts as float noise.
inline constexpr double kProbTol = 1e-12;
/// Default cap on the number of spins (2^16 dense states).
inline constexpr int kDefaultMaxSpins = 16;
/// Hard cap on the number of spins (2^20 dense states).
inline constexpr int kHardMaxSpins = 20;

/**
 * @brief One configuration of M two-valued classical spins.
 *
 * Bits b_gamma take values {0,1}; the associated spin values are
 * s_gamma = 2 b_gamma - 1. Spin 1 is the most significant bit of the
 * state index, so for M=3 the states in index order 0..7 are
 * (-,-,-), (-,-,+), (-,+,-), ..., (+,+,+).
 */
struct SpinConfig {
    int M = 0;
    std::vector<int> bits;  ///< length M, entries in {0,1}; bits[0] is spin 1

    SpinConfig() = default;
    SpinConfig(int M_, std::vector<int> bits_) : M(M_), bits(std::move(bits_)) {
        if (M < 1 || M > kHardMaxSpins) {
            throw std::invalid_argument("SpinConfig: M out of range");
        }
        if (static_cast<int>(bits.size()) != M) {
            throw std::invalid_argument("SpinConfig: bit count != M");
        }
        for (int b : bits) {
            if (b != 0 && b != 1) {
                throw std::invalid_argument("SpinConfig: bits must be 0 or 1");
            }
        }
    }

    /// Spin value s_gamma = +-1 for the 1-based spin index gamma.
    [[nodiscard]] int spin(int gamma) const {
        if (gamma < 1 || gamma > M) {
            throw std::invalid_argument("SpinConfig::spin: bad spin index");
        }
        return 2 * bits[static_cast<std::size_t>(gamma - 1)] - 1;
    }

    bool operator==(const SpinConfig&) const = default;
};

/// Number of configurations of M spins.
inline std::size_t state_count(int M) {
    if (M < 1 || M > kHardMaxSpins) {
        throw std::invalid_argument("state_count: M out of range");
    }
    return std::size_t{1} << M;
}

/// Map a configuration to its state index (spin 1 most significant).
inline std::size_t config_index(const SpinConfig& config) {
    std::size_t tau = 0;
    for (int b : config.bits) {
        tau = (tau << 1) | static_cast<std::size_t>(b);
    }
    return tau;
}

/// Inverse of config_index.
inline SpinConfig config_from_index(std::size_t tau, int M) {
    if (tau >= state_count(M)) {
        throw std::invalid_argument("config_from_index: index out of range");
    }
    std::vector<int> bits(static_cast<std::size_t>(M));
    for (int gamma = 1; gamma <= M; ++gamma) {
        bits[static_cast<std::size_t>(gamma - 1)] =
            static_cast<int>((tau >> (M - gamma)) & 1U);
    }
    return SpinConfig(M, std::move(bits));
}

/// Spin value s_gamma = +-1 of state index tau without materializing bits.
inline int spin_value(std::size_t tau, int M, int gamma) {
    if (gamma < 1 || gamma > M) {
        throw std::invalid_argument("spin_value: bad spin index");
    }
    return ((tau >> (M - gamma)) & 1U) ? 1 : -1;
}

/**
 * @brief Probability distribution over the 2^M spin configurations.
 *
 * Entries within kProbTol below zero are clamped to zero; anything more
 * negative, or a total deviating from one, is rejected as invalid data.
 */
struct ProbabilityDistribution {
    int M = 0;
    Eigen::VectorXd p;

    ProbabilityDistribution() = default;
    ProbabilityDistribution(int M_, Eigen::VectorXd p_, int max_spins = kDefaultMaxSpins)
        : M(M_), p(std::move(p_)) {
        if (M < 1 || M > max_spins || max_spins > kHardMaxSpins) {
            throw std::invalid_argument("ProbabilityDistribution: M out of range");
        }
        if (p.size() != static_cast<Eigen::Index>(state_count(M))) {
            throw std::invalid_argument("ProbabilityDistribution: wrong vector length");
        }
        double sum = 0.0;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            if (p[i] < -kProbTol) {
                throw std::invalid_argument(
                    "ProbabilityDistribution: negative probability beyond tolerance");
            }
            if (p[i] < 0.0) {
                p[i] = 0.0;
            }
            sum += p[i];
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw std::invalid_argument("ProbabilityDistribution: probabilities do not sum to 1");
        }
        if (std::abs(sum - 1.0) > kProbTol) {
            p /= sum;  // renormalize away accumulated float noise
        }
    }

    /// Delta distribution concentrated on one state index.
    static ProbabilityDistribution delta(int M, std::size_t tau) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(
            static_cast<Eigen::Index>(state_count(M)));
        p[static_cast<Eigen::Index>(tau)] = 1.0;
        return {M, std::move(p)};
    }

    /// Uniform distribution over all configurations.
    static ProbabilityDistribution uniform(int M) {
        const auto n = static_cast<Eigen::Index>(state_count(M));
        return {M, Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
    }
};

/**
 * @brief Expectation value of a product of spins, <prod_{gamma in subset} s_gamma>.
 */
inline double expectation(const ProbabilityDistribution& dist,
                          std::span<const int> spins) {
    if (spins.empty()) {
        throw std::invalid_argument("expectation: empty spin subset");
    }
    for (int gamma : spins) {
        if (gamma < 1 || gamma > dist.M) {
            throw std::invalid_argument("expectation: bad spin index");
        }
    }
    // Precompute the parity mask of the requested spins: the product of
    // their +-1 values is -1 exactly when an odd number of their bits is set.
    std::size_t mask = 0;
    for (int gamma : spins) {
        mask |= std::size_t{1} << (dist.M - gamma);
    }
    double acc = 0.0;
    for (Eigen::Index tau = 0; tau < dist.p.size(); ++tau) {
        const int unset = std::popcount(mask) -
                          std::popcount(static_cast<std::size_t>(tau) & mask);
        const int parity = unset % 2 == 0 ? 1 : -1;
        acc += dist.p[tau] * parity;
    }
    return acc;
}

inline double expectation(const ProbabilityDistribution& dist,
                          std::initializer_list<int> spins) {
    return expectation(dist, std::span<const int>(spins.begin(), spins.size()));
}

/**
 * @brief Pair of forward and conjugate classical wave functions.
 *
 * Local probabilities are the componentwise products p_tau = qf_tau * qb_tau.
 */
struct WaveFunctionPair {
    Eigen::VectorXd qf;  ///< forward wave function
    Eigen::VectorXd qb;  ///< conjugate wave function

    WaveFunctionPair() = default;
    WaveFunctionPair(Eigen::VectorXd qf_, Eigen::VectorXd qb_)
        : qf(std::move(qf_)), qb(std::move(qb_)) {
        if (qf.size() != qb.size() || qf.size() == 0) {
            throw std::invalid_argument("WaveFunctionPair: size mismatch");
        }
    }

    [[nodiscard]] double overlap() const { return qf.dot(qb); }
};

/// Build the local probability distribution p_tau = qf_tau * qb_tau.
inline ProbabilityDistribution distribution_from_pair(const WaveFunctionPair& pair, int M) {
    if (pair.qf.size() != static_cast<Eigen::Index>(state_count(M))) {
        throw std::invalid_argument("distribution_from_pair: size mismatch");
    }
    Eigen::VectorXd p = pair.qf.cwiseProduct(pair.qb);
    const double sum = p.sum();
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution_from_pair: boundary data not normalized");
    }
    p /= sum;
    return {M, std::move(p)};
}

/**
 * @brief Classical wave function with unit Euclidean norm.
 *
 * Induces the distribution p_tau = q_tau^2; entry signs carry no
 * probabilistic information.
 */
struct NormalizedClassicalWaveFunction {
    Eigen::VectorXd q;

    NormalizedClassicalWaveFunction() = default;
    explicit NormalizedClassicalWaveFunction(Eigen::VectorXd q_) : q(std::move(q_)) {
        if (q.size() == 0) {
            throw std::invalid_argument("NormalizedClassicalWaveFunction: empty");
        }
        const double norm2 = q.squaredNorm();
        if (std::abs(norm2 - 1.0) > 1e-9) {
            throw std::invalid_argument("NormalizedClassicalWaveFunction: not unit norm");
        }
        q /= std::sqrt(norm2);
    }
};

/// Build the induced distribution p_tau = q_tau^2.
inline ProbabilityDistribution distribution_from_normalized(
    const NormalizedClassicalWaveFunction& wf, int M) {
    if (wf.q.size() != static_cast<Eigen::Index>(state_count(M))) {
        throw std::invalid_argument("distribution_from_normalized: size mismatch");
    }
    return {M, wf.q.cwiseProduct(wf.q)};
}

/// Serialize a distribution to the JSON object {"M": int, "p": [floats]}.
inline nlohmann::json to_json(const ProbabilityDistribution& dist) {
    std::vector<double> p(dist.p.data(), dist.p.data() + dist.p.size());
    return nlohmann::json{{"M", dist.M}, {"p", p}};
}

/// Parse a distribution from the JSON object {"M": int, "p": [floats]}.
inline ProbabilityDistribution distribution_from_json(const nlohmann::json& j) {
    const int M = j.at("M").get<int>();
    const auto values = j.at("p").get<std::vector<double>>();
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(
        values.data(), static_cast<Eigen::Index>(values.size()));
    return {M, std::move(p)};
}

/// Serialize a distribution to CSV lines "index,probability".
inline std::string to_csv(const ProbabilityDistribution& dist) {
    std::ostringstream out;
    out.precision(17);
    out << "index,probability\n";
    for (Eigen::Index tau = 0; tau < dist.p.size(); ++tau) {
        out << tau << "," << dist.p[tau] << "\n";
    }
    return out.str();
}

/// Parse a distribution from the CSV emitted by to_csv.
inline ProbabilityDistribution distribution_from_csv(const std::string& text, int M) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(state_count(M)));
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("index", 0) == 0) {
                continue;  // header row
            }
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("distribution_from_csv: malformed line");
        }
        const auto tau = static_cast<Eigen::Index>(std::stoull(line.substr(0, comma)));
        if (tau < 0 || tau >= p.size()) {
            throw std::invalid_argument("distribution_from_csv: index out of range");
        }
        p[tau] = std::stod(line.substr(comma + 1));
    }
    return {M, std::move(p)};
}

}  // namespace isq
