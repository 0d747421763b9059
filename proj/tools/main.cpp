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

/**
 * @file main.cpp
 * @brief The `isq` command line interface.
 *
 * Subcommands:
 *   run <circuit-file>   evolve a circuit and emit a per-layer report
 *   verify <preset>      run a named verification suite
 *   spectrum <chain-file> eigenvalues and period of each chain step
 *   continuous <method>  continuous-spin expectation sweep as CSV
 *
 * Exit codes: 0 = all checks passed, 1 = violation found, 2 = usage error.
 */
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "isq/acceptance.hpp"
#include "isq/chain.hpp"
#include "isq/circuit.hpp"
#include "isq/continuous.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------------------
// run

int cmd_run(const std::string& circuit_file, const std::string& format, unsigned int seed,
            const std::string& out_dir) {
    const auto text = read_file(circuit_file);
    if (!text) {
        std::cerr << "error: cannot read " << circuit_file << "\n";
        return kExitUsage;
    }
    isq::CircuitProgram program;
    try {
        program = isq::parse_circuit(*text);
    } catch (const isq::CircuitParseError& e) {
        std::cerr << "error: " << circuit_file << ": " << e.what() << "\n";
        return kExitUsage;
    }
    isq::RunReport report;
    try {
        report = isq::compile_and_run(program, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    const isq::ReportFormat fmt =
        format == "csv" ? isq::ReportFormat::kCsv : isq::ReportFormat::kJson;
    const std::string artifact = isq::emit_report(report, fmt);
    if (out_dir.empty()) {
        std::cout << artifact;
    } else {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
            return kExitUsage;
        }
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / (format == "csv" ? "report.csv" : "report.json");
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path.string() << "\n";
            return kExitUsage;
        }
        out << artifact;
        std::cout << path.string() << "\n";
    }
    for (const isq::LayerReport& layer : report.layers) {
        if (!layer.positive) {
            std::cerr << "violation: layer " << layer.t
                      << " fails the quantum condition\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& preset) {
    if (preset != "acceptance") {
        std::cerr << "error: unknown preset '" << preset << "' (available: acceptance)\n";
        return kExitUsage;
    }
    int failures = 0;
    for (const isq::AcceptanceResult& r : isq::run_acceptance_suite()) {
        std::printf("criterion %2d: %s  (%s)\n", r.index, r.ok ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.ok) {
            ++failures;
        }
    }
    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// spectrum

struct ChainStep {
    int line = 0;
    std::string name;
    Eigen::MatrixXd s;
};

std::optional<std::vector<ChainStep>> parse_chain_file(const std::string& text,
                                                       std::string& error) {
    std::vector<ChainStep> steps;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) {
            continue;  // blank or comment-only line
        }
        ChainStep step{line_no, name, {}};
        try {
            if (name == "sp") {
                step.s = isq::sp_matrix();
            } else if (name == "su") {
                double u = 0.0;
                if (!(ls >> u)) {
                    error = "line " + std::to_string(line_no) + ": su needs a parameter u";
                    return std::nullopt;
                }
                step.s = isq::su_matrix(u);
            } else if (name == "z22") {
                step.s = isq::z22_matrix();
            } else if (name == "hatsp") {
                step.s = isq::hat_sp_matrix();
            } else if (name == "hadamard") {
                step.s = isq::step_from_interaction(isq::hadamard_interaction(), 6).S;
            } else if (name == "swap") {
                step.s = isq::step_from_interaction(isq::swap_interaction(), 6).S;
            } else if (name == "frustrated") {
                double gamma = 0.0, delta = 0.0, offset = 0.0;
                if (!(ls >> gamma >> delta >> offset)) {
                    error = "line " + std::to_string(line_no) +
                            ": frustrated needs gamma, delta, offset";
                    return std::nullopt;
                }
                step.s = isq::step_from_interaction(
                    isq::frustrated_interaction(gamma, delta, offset), 6).S;
            } else {
                error = "line " + std::to_string(line_no) + ": unknown step '" + name + "'";
                return std::nullopt;
            }
        } catch (const std::exception& e) {
            error = "line " + std::to_string(line_no) + ": " + e.what();
            return std::nullopt;
        }
        std::string extra;
        if (ls >> extra) {
            error = "line " + std::to_string(line_no) + ": trailing token '" + extra + "'";
            return std::nullopt;
        }
        steps.push_back(std::move(step));
    }
    if (steps.empty()) {
        error = "chain file defines no steps";
        return std::nullopt;
    }
    return steps;
}

int cmd_spectrum(const std::string& chain_file) {
    const auto text = read_file(chain_file);
    if (!text) {
        std::cerr << "error: cannot read " << chain_file << "\n";
        return kExitUsage;
    }
    std::string error;
    const auto steps = parse_chain_file(*text, error);
    if (!steps) {
        std::cerr << "error: " << chain_file << ": " << error << "\n";
        return kExitUsage;
    }
    nlohmann::json out;
    out["steps"] = nlohmann::json::array();
    for (const ChainStep& step : *steps) {
        const Eigen::EigenSolver<Eigen::MatrixXd> solver(step.s);
        nlohmann::json entry;
        entry["line"] = step.line;
        entry["name"] = step.name;
        nlohmann::json eigs = nlohmann::json::array();
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            const std::complex<double> z = solver.eigenvalues()[i];
            eigs.push_back({z.real(), z.imag()});
        }
        entry["eigenvalues"] = eigs;
        // Smallest power at which the step is the identity, when one exists.
        const Eigen::MatrixXd identity =
            Eigen::MatrixXd::Identity(step.s.rows(), step.s.cols());
        Eigen::MatrixXd power = step.s;
        entry["period"] = nullptr;
        for (int h = 1; h <= 4096; ++h) {
            if ((power - identity).lpNorm<Eigen::Infinity>() <= 1e-8) {
                entry["period"] = h;
                break;
            }
            power = step.s * power;
        }
        out["steps"].push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// continuous

int cmd_continuous(const std::string& method, const std::vector<double>& rho_in, int directions,
                   long long samples, unsigned int seed) {
    const Eigen::Vector3d rho(rho_in[0], rho_in[1], rho_in[2]);
    if (rho.norm() > 1.0 + 1e-12) {
        std::cerr << "error: |rho| must not exceed 1\n";
        return kExitUsage;
    }
    isq::RotationInvariantModel model{rho, {}};
    std::printf("e_x,e_y,e_z,estimate,stderr,exact,method\n");
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    bool violation = false;
    for (int i = 0; i < directions; ++i) {
        // Deterministic golden-spiral direction sweep over the sphere.
        const double z = 1.0 - 2.0 * (i + 0.5) / directions;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double az = golden * i;
        const Eigen::Vector3d e(r * std::cos(az), r * std::sin(az), z);
        const isq::HalfSpaceSpin spin{e};
        isq::ExpectationEstimate est;
        if (method == "quadrature") {
            est = isq::rotation_invariant_expectation_quadrature(model, spin);
        } else {
            est = isq::rotation_invariant_expectation_monte_carlo(
                model, spin, samples, seed + static_cast<unsigned int>(i));
        }
        const double exact = rho.dot(e);
        std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", e[0], e[1], e[2], est.value,
                    est.error, exact, method.c_str());
        const double tol = method == "quadrature" ? 1e-6 : 5.0 * est.error + 1e-12;
        if (std::abs(est.value - exact) > tol) {
            violation = true;
        }
    }
    return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum subsystems embedded in classical Ising-spin systems"};
    app.require_subcommand(1);

    std::string circuit_file;
    std::string format = "json";
    unsigned int seed = 0;
    std::string out_dir;
    CLI::App* run = app.add_subcommand("run", "Evolve a circuit file and emit a report");
    run->add_option("circuit-file", circuit_file, "Circuit description file")->required();
    run->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--seed", seed, "Seed recorded in the report");
    run->add_option("--out", out_dir, "Directory receiving the report artifact");

    std::string preset;
    CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("preset", preset, "Suite preset (acceptance)")->required();

    std::string chain_file;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues and period of each chain step");
    spectrum->add_option("chain-file", chain_file, "Chain description file")->required();

    std::string method;
    std::vector<double> rho_in = {0.3, -0.5, 0.6};
    int directions = 20;
    long long samples = 100000;
    unsigned int cseed = 0;
    CLI::App* continuous =
        app.add_subcommand("continuous", "Continuous-spin expectation sweep as CSV");
    continuous->add_option("method", method, "Estimator: quadrature or montecarlo")
        ->required()
        ->check(CLI::IsMember({"quadrature", "montecarlo"}));
    continuous->add_option("--rho", rho_in, "Qubit coefficient vector (three values)")
        ->expected(3);
    continuous->add_option("--directions", directions, "Number of sweep directions")
        ->check(CLI::PositiveNumber);
    continuous->add_option("--samples", samples, "Monte Carlo samples per direction")
        ->check(CLI::PositiveNumber);
    continuous->add_option("--seed", cseed, "Monte Carlo base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(circuit_file, format, seed, out_dir);
        }
        if (verify->parsed()) {
            return cmd_verify(preset);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(chain_file);
        }
        if (continuous->parsed()) {
            return cmd_continuous(method, rho_in, directions, samples, cseed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
