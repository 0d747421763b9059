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
 * @file circuit.hpp
 * Line-oriented circuit DSL: parser with line/column diagnostics, the
 * compiler that lowers gate statements onto a classical realization space,
 * the runner that evolves the distribution and checks the extracted state
 * layer by layer, and deterministic JSON/CSV report emission.
 */
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "classical_ops.hpp"
#include "gates.hpp"
#include "qcond.hpp"

namespace isq {

/// Parse failure with a 1-based source position.
class CircuitParseError : public std::runtime_error {
  public:
    CircuitParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// A gate statement that cannot be lowered onto the chosen realization space.
class CircuitCompileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Initial-state presets of the circuit header.
struct ProductStatePreset {
    /// One signed axis per qubit: +k or -k selects the +-1 eigenstate of
    /// coefficient direction k in {1,2,3}.
    std::vector<int> axes;

    bool operator==(const ProductStatePreset&) const = default;
};

struct BellStatePreset {
    bool operator==(const BellStatePreset&) const = default;
};

struct ThetaStatePreset {
    double theta = 0.0;

    bool operator==(const ThetaStatePreset&) const = default;
};

using StatePreset = std::variant<ProductStatePreset, BellStatePreset, ThetaStatePreset>;

/// Parsed circuit: header plus ordered gate statements.
struct CircuitProgram {
    int qubits = 1;
    RealizationMap map = RealizationMap::Direct3;
    StatePreset state = ProductStatePreset{{3}};
    std::vector<GateSpec> gates;

    bool operator==(const CircuitProgram& other) const {
        if (qubits != other.qubits || map != other.map || state != other.state ||
            gates.size() != other.gates.size()) {
            return false;
        }
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (gates[i].name != other.gates[i].name ||
                gates[i].targets != other.gates[i].targets) {
                return false;
            }
        }
        return true;
    }
};

inline std::string realization_map_string(RealizationMap map) {
    switch (map) {
        case RealizationMap::Direct3: return "direct3";
        case RealizationMap::Direct15: return "direct15";
        case RealizationMap::Correlation6: return "correlation6";
        case RealizationMap::Signed3: return "signed3";
        case RealizationMap::Extended4: return "extended4";
        case RealizationMap::Icosa6: return "icosa6";
    }
    throw std::logic_error("realization_map_string: unknown map");
}

inline std::optional<RealizationMap> realization_map_from_string(const std::string& s) {
    if (s == "direct3") return RealizationMap::Direct3;
    if (s == "direct15") return RealizationMap::Direct15;
    if (s == "correlation6") return RealizationMap::Correlation6;
    if (s == "signed3") return RealizationMap::Signed3;
    if (s == "extended4") return RealizationMap::Extended4;
    if (s == "icosa6") return RealizationMap::Icosa6;
    return std::nullopt;
}

/// Number of qubits each realization space carries.
inline int realization_map_qubits(RealizationMap map) {
    return realization_coeff_dim(map) == 15 ? 2 : 1;
}

namespace detail {

struct Token {
    std::string text;
    int column = 0;  ///< 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

inline int parse_int_token(const Token& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok.text, &used);
        if (used != tok.text.size()) {
            throw std::invalid_argument("");
        }
        return value;
    } catch (const std::exception&) {
        throw CircuitParseError(line, tok.column, "expected " + what + ", got '" +
                                                      tok.text + "'");
    }
}

inline StatePreset parse_state_token(const Token& tok, int line) {
    const std::string& s = tok.text;
    if (s == "bell") {
        return BellStatePreset{};
    }
    if (s.rfind("theta:", 0) == 0) {
        try {
            std::size_t used = 0;
            const double theta = std::stod(s.substr(6), &used);
            if (used != s.size() - 6) {
                throw std::invalid_argument("");
            }
            return ThetaStatePreset{theta};
        } catch (const std::exception&) {
            throw CircuitParseError(line, tok.column, "bad theta value in '" + s + "'");
        }
    }
    if (s.rfind("product:", 0) == 0) {
        ProductStatePreset preset;
        std::stringstream ss(s.substr(8));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.size() != 2 || (item[0] != '+' && item[0] != '-') ||
                item[1] < '1' || item[1] > '3') {
                throw CircuitParseError(line, tok.column,
                                        "bad product entry '" + item +
                                            "' (expected +k or -k, k in 1..3)");
            }
            const int axis = item[1] - '0';
            preset.axes.push_back(item[0] == '+' ? axis : -axis);
        }
        if (preset.axes.empty()) {
            throw CircuitParseError(line, tok.column, "empty product state list");
        }
        return preset;
    }
    throw CircuitParseError(line, tok.column, "unknown state preset '" + s + "'");
}

}  // namespace detail

/**
 * @brief Parse the line-oriented circuit text.
 *
 * Grammar: '#' starts a comment; header lines "qubits Q", "map NAME",
 * "state PRESET" precede gate lines "NAME t1 [t2]". State presets are
 * product:+-k per qubit, bell, and theta:<float>. The first error is
 * reported with its 1-based line and column.
 */
inline CircuitProgram parse_circuit(const std::string& text) {
    CircuitProgram program;
    bool saw_qubits = false;
    bool saw_map = false;
    bool saw_state = false;
    bool in_gates = false;
    int line_no = 0;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::vector<detail::Token> tokens = detail::tokenize_line(line);
        if (tokens.empty()) {
            continue;
        }
        const detail::Token& head = tokens[0];
        if (head.text == "qubits" || head.text == "map" || head.text == "state") {
            if (in_gates) {
                throw CircuitParseError(line_no, head.column,
                                        "header line after the first gate");
            }
            if (tokens.size() != 2) {
                throw CircuitParseError(line_no, head.column,
                                        "header key '" + head.text +
                                            "' takes exactly one value");
            }
            if (head.text == "qubits") {
                program.qubits = detail::parse_int_token(tokens[1], line_no, "qubit count");
                if (program.qubits < 1 || program.qubits > 2) {
                    throw CircuitParseError(line_no, tokens[1].column,
                                            "qubit count must be 1 or 2");
                }
                saw_qubits = true;
            } else if (head.text == "map") {
                const auto map = realization_map_from_string(tokens[1].text);
                if (!map) {
                    throw CircuitParseError(line_no, tokens[1].column,
                                            "unknown map '" + tokens[1].text + "'");
                }
                program.map = *map;
                saw_map = true;
            } else {
                program.state = detail::parse_state_token(tokens[1], line_no);
                saw_state = true;
            }
            continue;
        }
        // Gate statement.
        if (!saw_qubits || !saw_map || !saw_state) {
            throw CircuitParseError(line_no, head.column,
                                    "qubits, map, and state must precede gate lines");
        }
        in_gates = true;
        const auto gate = gate_name_from_string(head.text);
        if (!gate) {
            throw CircuitParseError(line_no, head.column,
                                    "unknown gate '" + head.text + "'");
        }
        const int arity = gate_arity(*gate);
        if (static_cast<int>(tokens.size()) - 1 != arity) {
            throw CircuitParseError(line_no, head.column,
                                    "gate " + head.text + " takes " +
                                        std::to_string(arity) + " target(s), got " +
                                        std::to_string(tokens.size() - 1));
        }
        GateSpec spec{*gate, {}};
        for (int i = 1; i <= arity; ++i) {
            const int t = detail::parse_int_token(tokens[static_cast<std::size_t>(i)],
                                                  line_no, "target qubit");
            if (t < 1 || t > program.qubits) {
                throw CircuitParseError(line_no,
                                        tokens[static_cast<std::size_t>(i)].column,
                                        "target out of range [1, " +
                                            std::to_string(program.qubits) + "]");
            }
            spec.targets.push_back(t);
        }
        if (arity == 2 && spec.targets[0] == spec.targets[1]) {
            throw CircuitParseError(line_no, tokens[2].column, "duplicate targets");
        }
        program.gates.push_back(std::move(spec));
    }
    if (!saw_qubits || !saw_map || !saw_state) {
        throw CircuitParseError(line_no + 1, 1,
                                "missing header (qubits, map, and state are required)");
    }
    if (realization_map_qubits(program.map) != program.qubits) {
        throw CircuitParseError(1, 1, "map " + realization_map_string(program.map) +
                                          " carries " +
                                          std::to_string(realization_map_qubits(program.map)) +
                                          " qubit(s), header says " +
                                          std::to_string(program.qubits));
    }
    if (const auto* product = std::get_if<ProductStatePreset>(&program.state)) {
        if (static_cast<int>(product->axes.size()) != program.qubits) {
            throw CircuitParseError(1, 1, "product state needs one entry per qubit");
        }
    } else if (program.qubits != 2) {
        throw CircuitParseError(1, 1, "bell and theta states require two qubits");
    }
    return program;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// Canonical text form; parses back to an identical program.
inline std::string pretty_print(const CircuitProgram& program) {
    std::string out = "qubits " + std::to_string(program.qubits) + "\n";
    out += "map " + realization_map_string(program.map) + "\n";
    out += "state ";
    if (const auto* product = std::get_if<ProductStatePreset>(&program.state)) {
        out += "product:";
        for (std::size_t i = 0; i < product->axes.size(); ++i) {
            const int a = product->axes[i];
            out += (i > 0 ? "," : "");
            out += (a > 0 ? "+" : "-");
            out += std::to_string(std::abs(a));
        }
    } else if (std::holds_alternative<BellStatePreset>(program.state)) {
        out += "bell";
    } else {
        out += "theta:" +
               detail::format_double(std::get<ThetaStatePreset>(program.state).theta);
    }
    out += "\n";
    for (const GateSpec& g : program.gates) {
        out += gate_name_string(g.name);
        for (int t : g.targets) {
            out += " " + std::to_string(t);
        }
        out += "\n";
    }
    return out;
}

/// Quantum density matrix of a state preset.
inline QuantumDensityMatrix preset_density_matrix(const CircuitProgram& program) {
    const PauliTensorBasis basis(program.qubits);
    if (const auto* product = std::get_if<ProductStatePreset>(&program.state)) {
        CMatrix m = CMatrix::Identity(1, 1);
        for (const int a : product->axes) {
            Eigen::Vector3d v = Eigen::Vector3d::Zero();
            v[std::abs(a) - 1] = a > 0 ? 1.0 : -1.0;
            const PauliTensorBasis one(1);
            CMatrix single = 0.5 * CMatrix::Identity(2, 2);
            for (int k = 1; k <= 3; ++k) {
                single += 0.5 * v[k - 1] * one.generator(one.flat_index({k}));
            }
            m = kron(m, single);
        }
        return rho_from_matrix(basis, m);
    }
    if (std::holds_alternative<BellStatePreset>(program.state)) {
        Eigen::Vector4cd psi;
        // Spin-up is bit one: the Bell state pairs both-up with both-down.
        psi << 1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2;
        return rho_from_matrix(basis, psi * psi.adjoint());
    }
    const double theta = std::get<ThetaStatePreset>(program.state).theta;
    Eigen::Vector4cd psi;
    psi << 0.0, std::cos(theta), std::sin(theta), 0.0;
    return rho_from_matrix(basis, psi * psi.adjoint());
}

/// Project a full coefficient vector onto the map's coefficient space.
inline Eigen::VectorXd preset_coefficients(const CircuitProgram& program,
                                           const QuantumDensityMatrix& rho) {
    if (program.map == RealizationMap::Extended4) {
        if (std::abs(rho.coefficients[1]) > 1e-12) {
            throw CircuitCompileError(
                "map extended4 realizes only states with vanishing second coefficient");
        }
        Eigen::Vector2d c(rho.coefficients[0], rho.coefficients[2]);
        return c;
    }
    return rho.coefficients;
}

/// Rebuild the full quantum state from a map's extracted coefficients.
inline QuantumDensityMatrix coefficients_to_rho(RealizationMap map,
                                                const Eigen::VectorXd& coeff) {
    if (map == RealizationMap::Extended4) {
        const PauliTensorBasis basis(1);
        Eigen::Vector3d full(coeff[0], 0.0, coeff[1]);
        return rho_from_coefficients(basis, full);
    }
    const PauliTensorBasis basis(realization_map_qubits(map));
    return rho_from_coefficients(basis, coeff);
}

/// Extracted state of one circuit layer (layer 0 is the input).
struct LayerReport {
    int t = 0;
    Eigen::VectorXd rho_z;  ///< extracted quantum coefficients
    bool positive = false;
    bool pure = false;
};

/// Full run record: per-layer extraction plus the Frobenius distance of the
/// final classical extraction from the reference unitary evolution.
struct RunReport {
    CircuitProgram program;
    std::uint64_t seed = 0;
    std::vector<LayerReport> layers;
    double final_fidelity = 0.0;  ///< ||rho_classical - rho_reference||_F
};

/**
 * @brief Lower the program onto its realization space and evolve.
 *
 * The initial distribution realizes the preset state; every gate becomes a
 * classical permutation or signed linear map. After each layer the quantum
 * coefficients are extracted and checked for positivity and purity, and the
 * final extraction is compared against the reference evolution obtained by
 * conjugating the preset density matrix with the gate unitaries.
 */
inline RunReport compile_and_run(const CircuitProgram& program, std::uint64_t seed = 0) {
    const QuantumDensityMatrix initial = preset_density_matrix(program);
    const Eigen::VectorXd coeff0 = preset_coefficients(program, initial);

    // Lower all gates before running so errors surface as compile errors.
    std::vector<Realization> lowered;
    for (const GateSpec& g : program.gates) {
        std::optional<Realization> r = gate_realization(g, program.map);
        if (!r) {
            if (g.name == GateName::T) {
                throw CircuitCompileError("T unavailable as unique jump; use map signed3");
            }
            throw CircuitCompileError(gate_name_string(g.name) +
                                      " not realizable on map " +
                                      realization_map_string(program.map));
        }
        lowered.push_back(std::move(*r));
    }

    ProbabilityDistribution dist = realization_sample(program.map, coeff0);
    const PauliTensorBasis basis(program.qubits);
    QuantumDensityMatrix reference = initial;

    RunReport report;
    report.program = program;
    report.seed = seed;
    const auto record_layer = [&](int t) {
        const Eigen::VectorXd coeff = realization_extract(program.map, dist);
        const QuantumDensityMatrix rho = coefficients_to_rho(program.map, coeff);
        const PositivityReport pos = positivity_report(rho);
        report.layers.push_back({t, coeff, pos.positive, pos.pure});
        return rho;
    };

    QuantumDensityMatrix extracted = record_layer(0);
    if (!report.layers.front().positive) {
        throw CircuitCompileError("quantum condition violated at input");
    }
    for (std::size_t i = 0; i < lowered.size(); ++i) {
        dist = lowered[i].apply(dist);
        reference = apply_unitary(basis, reference, program.gates[i]);
        extracted = record_layer(static_cast<int>(i) + 1);
    }
    report.final_fidelity = (extracted.matrix - reference.matrix).norm();
    return report;
}

/// Deterministic JSON report: {layers: [{t, rho_z, positive, pure}], final_fidelity}.
inline nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json layers = nlohmann::json::array();
    for (const LayerReport& layer : report.layers) {
        nlohmann::json rho_z = nlohmann::json::array();
        for (Eigen::Index i = 0; i < layer.rho_z.size(); ++i) {
            rho_z.push_back(layer.rho_z[i]);
        }
        layers.push_back({{"t", layer.t},
                          {"rho_z", rho_z},
                          {"positive", layer.positive},
                          {"pure", layer.pure}});
    }
    return nlohmann::json{{"layers", layers},
                          {"final_fidelity", report.final_fidelity},
                          {"seed", report.seed}};
}

/// Report serialization format.
enum class ReportFormat { kJson, kCsv };

/// Serialize the run deterministically: same program and seed, same bytes.
inline std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::kJson) {
        return report_to_json(report).dump(2) + "\n";
    }
    const Eigen::Index dim = report.layers.empty() ? 0 : report.layers[0].rho_z.size();
    std::string out = "t";
    for (Eigen::Index i = 0; i < dim; ++i) {
        out += ",rho_z_" + std::to_string(i + 1);
    }
    out += ",positive,pure\n";
    for (const LayerReport& layer : report.layers) {
        out += std::to_string(layer.t);
        for (Eigen::Index i = 0; i < dim; ++i) {
            out += "," + detail::format_double(layer.rho_z[i]);
        }
        out += layer.positive ? ",1" : ",0";
        out += layer.pure ? ",1\n" : ",0\n";
    }
    out += "final_fidelity," + detail::format_double(report.final_fidelity) + "\n";
    return out;
}

}  // namespace isq
