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
 * @file continuous.hpp
 * Single-qubit realizations over continuous classical variables: the
 * Gaussian model with error-function expectations, the rotation-invariant
 * half-space model evaluated by quadrature and Monte Carlo, the circle
 * model with its discretized rotation, and least-squares fits that test
 * whether sampled expectations obey the harmonic or linear quantum form.
 */
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace isq {

// ---------------------------------------------------------------------------
// Gaussian model
// ---------------------------------------------------------------------------

/**
 * @brief Isotropic Gaussian distribution over three real variables,
 * p(x) = (a sqrt(pi))^-3 exp(-|x - mean|^2 / a^2).
 *
 * The width must be positive; the sharp a -> 0 limit is represented as a
 * flagged delta variant with closed-form expectations, avoiding width
 * underflow in the error functions.
 */
struct GaussianModel {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    double width = 1.0;
    bool delta_limit = false;

    GaussianModel(Eigen::Vector3d mean_in, double width_in)
        : mean(std::move(mean_in)), width(width_in) {
        if (!(width > 0.0)) {
            throw std::invalid_argument("GaussianModel: width must be positive");
        }
    }

    /// The sharp-distribution limit concentrated at the mean.
    static GaussianModel delta(Eigen::Vector3d mean_in) {
        GaussianModel m(std::move(mean_in), 1.0);
        m.width = 0.0;
        m.delta_limit = true;
        return m;
    }
};

/// Yes-no half-space observable s(e; x) = sign(x . e) for a unit direction e.
struct HalfSpaceSpin {
    Eigen::Vector3d e;

    explicit HalfSpaceSpin(Eigen::Vector3d e_in) : e(std::move(e_in)) {
        if (std::abs(e.norm() - 1.0) > 1e-12) {
            throw std::invalid_argument("HalfSpaceSpin: direction must be a unit vector");
        }
    }
};

namespace detail {

inline double sign_or_zero_up(double x) { return x >= 0.0 ? 1.0 : -1.0; }

}  // namespace detail

/// Axis expectation <s_k> = erf(mean_k / a), k in {1,2,3}.
inline double gaussian_spin_expectation(const GaussianModel& model, int k) {
    if (k < 1 || k > 3) {
        throw std::invalid_argument("gaussian_spin_expectation: k must be in {1,2,3}");
    }
    const double m = model.mean[k - 1];
    if (model.delta_limit) {
        return m == 0.0 ? 0.0 : detail::sign_or_zero_up(m);
    }
    return std::erf(m / model.width);
}

/// All three axis expectations as a vector.
inline Eigen::Vector3d gaussian_spin_vector(const GaussianModel& model) {
    return {gaussian_spin_expectation(model, 1), gaussian_spin_expectation(model, 2),
            gaussian_spin_expectation(model, 3)};
}

/// Purity P = sum_k <s_k>^2; P = 1 marks a pure state, P = 0 maximal mixing.
inline double gaussian_purity(const GaussianModel& model) {
    return gaussian_spin_vector(model).squaredNorm();
}

/// Result of the pure-state width search; `found` is false when no positive
/// width reaches purity one.
struct WidthSolution {
    double width = 0.0;
    bool found = false;
};

/**
 * @brief Solve P(a) = 1 for the Gaussian width by bracketing and bisection.
 *
 * P(a) decreases monotonically from the number of nonzero mean components
 * (as a -> 0) to zero (as a -> infinity). A root therefore exists exactly
 * when at least two components of the mean are nonzero; with fewer the
 * purity stays strictly below one for every positive width and the search
 * reports failure.
 */
inline WidthSolution solve_width_for_pure(const Eigen::Vector3d& mean) {
    int nonzero = 0;
    for (int k = 0; k < 3; ++k) {
        if (mean[k] != 0.0) {
            ++nonzero;
        }
    }
    if (nonzero < 2) {
        return {};
    }
    const auto purity_at = [&mean](double a) {
        return gaussian_purity(GaussianModel(mean, a));
    };
    double lo = 1.0;
    while (purity_at(lo) <= 1.0) {
        lo /= 2.0;
        if (lo < 1e-300) {
            return {};
        }
    }
    double hi = 1.0;
    while (purity_at(hi) >= 1.0) {
        hi *= 2.0;
        if (hi > 1e300) {
            return {};
        }
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double p = purity_at(mid);
        if (std::abs(p - 1.0) <= 1e-12 || hi - lo <= 1e-15 * hi) {
            return {mid, true};
        }
        (p > 1.0 ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), true};
}

/**
 * @brief Classical expectation of the half-space spin under the Gaussian,
 * <s(e)> = erf((mean . e) / a).
 *
 * The projection x . e is itself Gaussian with mean mean . e and the same
 * width, so the three-dimensional integral collapses to one error function.
 */
inline double gaussian_halfspace_expectation(const GaussianModel& model,
                                             const HalfSpaceSpin& spin) {
    const double projected = model.mean.dot(spin.e);
    if (model.delta_limit) {
        return projected == 0.0 ? 0.0 : detail::sign_or_zero_up(projected);
    }
    return std::erf(projected / model.width);
}

/**
 * @brief Shortfall of the classical half-space spin against the quantum
 * expectation rho . e at a pure-state Gaussian.
 *
 * With rho_k = erf(mean_k / a) the two values agree exactly along the
 * coordinate axes, but in tilted directions the classical expectation
 * erf((mean . e)/a) stays strictly below the quantum value: the family of
 * half-space spins over a single Gaussian cannot reproduce the full
 * rotation-covariant qubit. Requires purity one within 1e-6.
 */
inline double gaussian_halfspace_mismatch(const GaussianModel& model,
                                          const HalfSpaceSpin& spin) {
    if (std::abs(gaussian_purity(model) - 1.0) > 1e-6) {
        throw std::invalid_argument("gaussian_halfspace_mismatch: model is not pure");
    }
    return gaussian_spin_vector(model).dot(spin.e) -
           gaussian_halfspace_expectation(model, spin);
}

// ---------------------------------------------------------------------------
// Rotation-invariant half-space model
// ---------------------------------------------------------------------------

/// Default unnormalized radial profile r^3 exp(-r): smooth at the origin and
/// rapidly decaying, chosen because the observables never depend on it.
inline double default_radial_profile(double r) { return r * r * r * std::exp(-r); }

/**
 * @brief Rotation-covariant probability distribution over R^3 realizing a
 * qubit state with coefficient vector rho, |rho| <= 1.
 *
 * The direction density mixes the pure-state form (rho_hat . x_hat) on the
 * supporting half-sphere with an isotropic component,
 *   f(x_hat) = |rho| (rho_hat . x_hat) theta(rho_hat . x_hat) / pi
 *              + (1 - |rho|) / (4 pi),
 * and the radius follows the (numerically normalized) radial profile. The
 * half-space spins then obey <s(e)> = rho . e for every unit e.
 */
struct RotationInvariantModel {
    Eigen::Vector3d rho = Eigen::Vector3d::Zero();
    std::function<double(double)> radial = default_radial_profile;

    explicit RotationInvariantModel(Eigen::Vector3d rho_in,
                                    std::function<double(double)> radial_in = {})
        : rho(std::move(rho_in)) {
        if (rho.norm() > 1.0 + 1e-12) {
            throw std::invalid_argument("RotationInvariantModel: |rho| must be <= 1");
        }
        if (radial_in) {
            radial = std::move(radial_in);
        }
    }
};

/// An expectation value with a one-standard-error uncertainty (zero for
/// deterministic quadrature).
struct ExpectationEstimate {
    double value = 0.0;
    double error = 0.0;
};

namespace detail {

/// Composite Simpson rule with n (even) subintervals.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2 != 0) {
        ++n;
    }
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

/// Azimuthal integral of sign(A cos(phi') + B) over a full period, A >= 0.
inline double azimuthal_sign_integral(double A, double B) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (A <= std::abs(B)) {
        return B >= 0.0 ? two_pi : -two_pi;
    }
    const double t = std::clamp(-B / A, -1.0, 1.0);
    return 4.0 * std::acos(t) - two_pi;
}

/// Grid-based inverse-CDF sampler for the radial density r^2 p~(r).
class RadialSampler {
  public:
    explicit RadialSampler(const std::function<double(double)>& profile, double r_max = 80.0,
                          int points = 4096)
        : grid_(points), cdf_(points) {
        double acc = 0.0;
        double prev = 0.0;
        const double h = r_max / (points - 1);
        for (int i = 0; i < points; ++i) {
            const double r = i * h;
            const double w = r * r * profile(r);
            if (!(w >= 0.0)) {
                throw std::invalid_argument("RadialSampler: radial profile must be nonnegative");
            }
            if (i > 0) {
                acc += 0.5 * (prev + w) * h;
            }
            grid_[static_cast<std::size_t>(i)] = r;
            cdf_[static_cast<std::size_t>(i)] = acc;
            prev = w;
        }
        if (!(acc > 0.0)) {
            throw std::invalid_argument("RadialSampler: radial profile integrates to zero");
        }
        normalization_ = acc;
        for (double& c : cdf_) {
            c /= acc;
        }
    }

    /// The numeric value of int r^2 p~(r) dr before normalization.
    [[nodiscard]] double normalization() const { return normalization_; }

    template <typename Rng>
    double draw(Rng& rng) const {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        const auto hi = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - cdf_.begin(), 1, static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
        const double c0 = cdf_[hi - 1];
        const double c1 = cdf_[hi];
        const double frac = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
        return grid_[hi - 1] + frac * (grid_[hi] - grid_[hi - 1]);
    }

  private:
    std::vector<double> grid_;
    std::vector<double> cdf_;
    double normalization_ = 0.0;
};

/// Any two unit vectors completing dir to a right-handed orthonormal frame.
inline void orthonormal_frame(const Eigen::Vector3d& dir, Eigen::Vector3d& u,
                              Eigen::Vector3d& v) {
    const Eigen::Vector3d helper =
        std::abs(dir.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
    u = dir.cross(helper).normalized();
    v = dir.cross(u);
}

}  // namespace detail

/// Probability density of the rotation-invariant model at a point x != 0.
inline double rotation_invariant_density(const RotationInvariantModel& model,
                                         const Eigen::Vector3d& x) {
    const double r = x.norm();
    if (r <= 0.0) {
        throw std::invalid_argument("rotation_invariant_density: x must be nonzero");
    }
    const double amplitude = model.rho.norm();
    double directional = (1.0 - amplitude) / (4.0 * std::numbers::pi);
    if (amplitude > 0.0) {
        const double cos_theta = model.rho.normalized().dot(x / r);
        if (cos_theta > 0.0) {
            directional += amplitude * cos_theta / std::numbers::pi;
        }
    }
    const detail::RadialSampler radial(model.radial);
    return model.radial(r) / radial.normalization() * directional;
}

/**
 * @brief Half-space spin expectation by deterministic quadrature.
 *
 * The radius drops out of sign(x . e), so only the angular integral remains.
 * In polar coordinates around rho_hat the azimuthal integral of the sign is
 * closed-form; the polar integral is done by composite Simpson on the smooth
 * segments between the kinks of the azimuthal result.
 */
inline ExpectationEstimate rotation_invariant_expectation_quadrature(
    const RotationInvariantModel& model, const HalfSpaceSpin& spin) {
    const double amplitude = model.rho.norm();
    if (amplitude < 1e-15) {
        return {0.0, 0.0};
    }
    constexpr double pi = std::numbers::pi;
    const double cos_phi = std::clamp(model.rho.normalized().dot(spin.e), -1.0, 1.0);
    const double phi = std::acos(cos_phi);
    const double sin_phi = std::sin(phi);
    // Kinks of the azimuthal integral at |cos(theta) cos(phi)| = sin(theta) sin(phi)
    // plus the edge of the supporting half-sphere.
    std::vector<double> cuts{0.0, pi};
    cuts.push_back(pi / 2.0);
    const double theta_kink = std::atan2(std::abs(cos_phi), sin_phi);
    cuts.push_back(theta_kink);
    cuts.push_back(pi - theta_kink);
    std::sort(cuts.begin(), cuts.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] <= 1e-14) {
            continue;
        }
        // Within one segment the sign of cos(theta) cos(phi) never changes;
        // fixing it from the midpoint keeps the integrand exact at segment
        // endpoints where cos evaluates to a rounded near-zero.
        const double mid_b = std::cos(0.5 * (cuts[i] + cuts[i + 1])) * cos_phi;
        const double b_sign = mid_b >= 0.0 ? 1.0 : -1.0;
        const auto integrand = [&](double theta) {
            const double s = std::sin(theta);
            const double c = std::cos(theta);
            double weight = (1.0 - amplitude) / (4.0 * pi);
            if (c > 0.0) {
                weight += amplitude * c / pi;
            }
            const double A = s * sin_phi;
            const double B = c * cos_phi;
            const double azimuthal = A <= std::abs(B)
                                         ? 2.0 * pi * b_sign
                                         : detail::azimuthal_sign_integral(A, B);
            return s * weight * azimuthal;
        };
        acc += detail::simpson(integrand, cuts[i], cuts[i + 1], 16384);
    }
    return {acc, 0.0};
}

/**
 * @brief Half-space spin expectation by Monte Carlo over the exact sampler.
 *
 * With probability |rho| the direction is drawn from the pure-state density
 * around rho_hat (polar angle via sin(theta) = sqrt(U), no rejection),
 * otherwise uniformly on the sphere; the radius follows the radial profile.
 * Samples are sharded over independent generator streams keyed by
 * (seed, shard index), so the estimate is deterministic given the seed.
 */
inline ExpectationEstimate rotation_invariant_expectation_monte_carlo(
    const RotationInvariantModel& model, const HalfSpaceSpin& spin, std::int64_t samples,
    std::uint64_t seed) {
    if (samples <= 1) {
        throw std::invalid_argument(
            "rotation_invariant_expectation_monte_carlo: need at least two samples");
    }
    const double amplitude = model.rho.norm();
    const Eigen::Vector3d axis =
        amplitude > 0.0 ? Eigen::Vector3d(model.rho.normalized()) : Eigen::Vector3d::UnitZ();
    Eigen::Vector3d u;
    Eigen::Vector3d v;
    detail::orthonormal_frame(axis, u, v);
    const detail::RadialSampler radial(model.radial);

    constexpr std::int64_t kShardSize = 1 << 16;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t done = 0;
    for (std::int64_t shard = 0; done < samples; ++shard) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(shard)};
        std::mt19937_64 rng(seq);
        const std::int64_t count = std::min(kShardSize, samples - done);
        for (std::int64_t i = 0; i < count; ++i) {
            double cos_theta;
            double sin_theta;
            if (unit(rng) < amplitude) {
                const double w = unit(rng);
                sin_theta = std::sqrt(w);
                cos_theta = std::sqrt(1.0 - w);
            } else {
                cos_theta = 2.0 * unit(rng) - 1.0;
                sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
            }
            const double az = 2.0 * std::numbers::pi * unit(rng);
            const Eigen::Vector3d dir =
                cos_theta * axis + sin_theta * (std::cos(az) * u + std::sin(az) * v);
            const Eigen::Vector3d x = radial.draw(rng) * dir;
            const double s = detail::sign_or_zero_up(x.dot(spin.e));
            sum += s;
            sum_sq += s * s;
        }
        done += count;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double variance = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(variance / n)};
}

/// Evaluation strategy for the rotation-invariant expectation.
enum class ContinuousMethod { kQuadrature, kMonteCarlo };

inline ExpectationEstimate rotation_invariant_expectation(
    const RotationInvariantModel& model, const HalfSpaceSpin& spin, ContinuousMethod method,
    std::int64_t samples = 100000, std::uint64_t seed = 0) {
    if (method == ContinuousMethod::kQuadrature) {
        return rotation_invariant_expectation_quadrature(model, spin);
    }
    return rotation_invariant_expectation_monte_carlo(model, spin, samples, seed);
}

// ---------------------------------------------------------------------------
// Circle model
// ---------------------------------------------------------------------------

/**
 * @brief Particle-on-a-circle distribution realizing a single qubit in a
 * plane: p(alpha) = r cos(alpha - psi) theta-hat / 2 + (1 - r) / (2 pi).
 *
 * The half-circle trigger observable then gives <s(phi)> = r cos(phi - psi).
 * The phase is kept unwrapped so rotation composition is plain addition.
 */
struct CircleModel {
    double psi = 0.0;
    double r = 1.0;

    CircleModel(double psi_in, double r_in) : psi(psi_in), r(r_in) {
        if (r < 0.0 || r > 1.0) {
            throw std::invalid_argument("CircleModel: amplitude must lie in [0, 1]");
        }
    }
};

/// Probability density at angle alpha (2 pi periodic).
inline double circle_density(const CircleModel& model, double alpha) {
    constexpr double pi = std::numbers::pi;
    double delta = std::remainder(alpha - model.psi, 2.0 * pi);
    double density = (1.0 - model.r) / (2.0 * pi);
    if (std::abs(delta) <= pi / 2.0) {
        density += model.r * std::cos(delta) / 2.0;
    }
    return density;
}

/// Trigger expectation <n(phi)> = (1 + r cos(phi - psi)) / 2.
inline double circle_occupation(const CircleModel& model, double phi) {
    return 0.5 * (1.0 + model.r * std::cos(phi - model.psi));
}

/// Spin expectation <s(phi)> = r cos(phi - psi).
inline double circle_expectation(const CircleModel& model, double phi) {
    return model.r * std::cos(phi - model.psi);
}

/// Rotate the realized state by gamma: psi -> psi + gamma, amplitude fixed.
inline CircleModel circle_rotate(const CircleModel& model, double gamma) {
    return {model.psi + gamma, model.r};
}

/**
 * @brief The circle model on N discrete angles, where a rotation by 2 pi / N
 * is an exact cyclic unique-jump permutation of the probabilities.
 *
 * Expectations of the half-circle trigger match the continuum within O(1/N).
 */
struct DiscretizedCircle {
    int n = 0;
    Eigen::VectorXd p;

    /// Angle of bin i, evenly spaced over [-pi, pi).
    [[nodiscard]] double angle(int i) const {
        return -std::numbers::pi + 2.0 * std::numbers::pi * i / n;
    }

    static DiscretizedCircle from_model(const CircleModel& model, int n) {
        if (n < 2) {
            throw std::invalid_argument("DiscretizedCircle: need at least two bins");
        }
        DiscretizedCircle d;
        d.n = n;
        d.p.resize(n);
        for (int i = 0; i < n; ++i) {
            d.p[i] = circle_density(model, d.angle(i));
        }
        const double total = d.p.sum();
        if (!(total > 0.0)) {
            throw std::invalid_argument("DiscretizedCircle: degenerate density");
        }
        d.p /= total;
        return d;
    }

    /// One unique-jump rotation step: every bin advances by 2 pi / n.
    void rotate_step() {
        const double last = p[n - 1];
        for (int i = n - 1; i > 0; --i) {
            p[i] = p[i - 1];
        }
        p[0] = last;
    }

    /// Half-circle trigger spin expectation at direction phi. Each bin is an
    /// arc of width 2 pi / n; the two bins straddling the trigger boundary
    /// contribute by their fractional overlap, so the discretization error
    /// stays well below 1/n.
    [[nodiscard]] double expectation(double phi) const {
        constexpr double pi = std::numbers::pi;
        const double half = pi / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double delta = std::remainder(angle(i) - phi, 2.0 * pi);
            const double overlap = std::clamp(
                std::min(delta + half, pi / 2.0) - std::max(delta - half, -pi / 2.0),
                0.0, 2.0 * half);
            acc += p[i] * (overlap / half - 1.0);
        }
        return acc;
    }
};

// ---------------------------------------------------------------------------
// Quantum-condition fits
// ---------------------------------------------------------------------------

/// Harmonic fit <s(phi)> = r cos(phi - psi) over circle samples.
struct CircleFitReport {
    double r = 0.0;
    double psi = 0.0;
    double residual = 0.0;  ///< max |sample - fit|
    bool quantum_ok = false;  ///< r <= 1 within tolerance
};

/**
 * @brief Least-squares harmonic fit of circle samples (phi_i, value_i).
 *
 * Fits value = A cos(phi) + B sin(phi) and reports r = |(A,B)|,
 * psi = atan2(B, A), and the worst-case residual. Model-generated data fit
 * with residual at rounding level; anything larger flags a distribution
 * whose trigger expectations are not of the quantum harmonic form.
 */
inline CircleFitReport circle_quantum_condition(
    const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 8) {
        throw std::invalid_argument("circle_quantum_condition: need at least 8 samples");
    }
    const auto rows = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(rows, 2);
    Eigen::VectorXd target(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& [phi, value] = samples[static_cast<std::size_t>(i)];
        design(i, 0) = std::cos(phi);
        design(i, 1) = std::sin(phi);
        target[i] = value;
    }
    const Eigen::Vector2d coeff = design.colPivHouseholderQr().solve(target);
    CircleFitReport report;
    report.r = coeff.norm();
    report.psi = std::atan2(coeff[1], coeff[0]);
    report.residual = (design * coeff - target).cwiseAbs().maxCoeff();
    report.quantum_ok = report.r <= 1.0 + 1e-9;
    return report;
}

/// Linear fit <s(e)> = rho . e over sphere samples.
struct SphereFitReport {
    Eigen::Vector3d rho = Eigen::Vector3d::Zero();
    double residual = 0.0;  ///< max |sample - fit|
    bool quantum_ok = false;  ///< |rho| <= 1 within tolerance
};

/**
 * @brief Least-squares linear fit of sphere samples (e_i, value_i).
 *
 * Recovers the coefficient vector rho from half-space spin expectations in
 * at least eight directions. A residual clearly above rounding level shows
 * the sampled family violates the linear quantum form -- as the Gaussian
 * model does once tilted directions are included.
 */
inline SphereFitReport sphere_quantum_condition(
    const std::vector<std::pair<Eigen::Vector3d, double>>& samples) {
    if (samples.size() < 8) {
        throw std::invalid_argument("sphere_quantum_condition: need at least 8 samples");
    }
    const auto rows = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(rows, 3);
    Eigen::VectorXd target(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& [e, value] = samples[static_cast<std::size_t>(i)];
        design.row(i) = e.transpose();
        target[i] = value;
    }
    const Eigen::Vector3d coeff = design.colPivHouseholderQr().solve(target);
    SphereFitReport report;
    report.rho = coeff;
    report.residual = (design * coeff - target).cwiseAbs().maxCoeff();
    report.quantum_ok = coeff.norm() <= 1.0 + 1e-9;
    return report;
}

}  // namespace isq
