// Copyright 2026 The dcqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <stdexcept>

#include "dcqo/circuit.h"
#include "dcqo/files.h"
#include "json.hpp"

namespace dcqo {

std::string format_circuit_text(const Circuit &c) {
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << c.width() << "\n";
    for (const Gate &g : c.gates()) {
        out << gate_name(g.kind);
        for (std::size_t k = 0; k < g.arity(); k++) {
            out << " " << g.qubits[k];
        }
        for (std::size_t k = 0; k < gate_param_count(g.kind); k++) {
            out << " " << g.params[k];
        }
        out << "\n";
    }
    return out.str();
}

Circuit parse_circuit_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Circuit c;
    bool have_width = false;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string word;
        if (!(fields >> word)) {
            continue;
        }
        if (!have_width) {
            long long n = 0;
            if (word != "qubits" || !(fields >> n) || n < 1) {
                fail("expected 'qubits <n>'");
            }
            c = Circuit(static_cast<std::size_t>(n));
            have_width = true;
            continue;
        }
        Gate g;
        try {
            g.kind = parse_gate_kind(word);
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
        for (std::size_t k = 0; k < g.arity(); k++) {
            long long q = -1;
            if (!(fields >> q) || q < 0) {
                fail("bad qubit index");
            }
            g.qubits[k] = static_cast<std::uint32_t>(q);
        }
        for (std::size_t k = 0; k < gate_param_count(g.kind); k++) {
            if (!(fields >> g.params[k])) {
                fail("missing parameter");
            }
        }
        std::string rest;
        if (fields >> rest) {
            fail("unexpected token '" + rest + "'");
        }
        try {
            c.append(g);
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
    }
    if (!have_width) {
        throw std::invalid_argument("circuit text has no 'qubits' line");
    }
    return c;
}

std::string circuit_metadata_json(const Circuit &c) {
    const CircuitMetadata &m = c.metadata;
    nlohmann::json j;
    j["width"] = c.width();
    j["gate_count"] = c.size();
    j["builder"] = m.builder;
    j["gate_set"] = m.gate_set;
    j["T"] = m.T;
    j["steps"] = m.steps;
    if (!m.normalization.empty()) {
        j["normalization"] = m.normalization;
    }
    if (!m.step_coefficients.empty()) {
        j["step_coefficients"] = m.step_coefficients;
    }
    if (m.gate_cutoff_applied) {
        j["gate_cutoff"] = {{"threshold", m.gate_cutoff}, {"removed", m.gates_removed}, {"kept", m.gates_kept}};
    }
    if (m.step_cutoff_applied) {
        j["step_cutoff"] = {{"threshold", m.step_cutoff}, {"steps_dropped", m.steps_dropped}};
    }
    GateCounts counts = count_gates(c);
    nlohmann::json by_kind = nlohmann::json::object();
    for (std::size_t k = 0; k < kNumGateKinds; k++) {
        if (counts.by_kind[k] != 0) {
            by_kind[std::string(gate_name(static_cast<GateKind>(k)))] = counts.by_kind[k];
        }
    }
    j["counts"] = {{"by_kind", by_kind}, {"two_qubit", counts.two_qubit}, {"total", counts.total}};
    return j.dump(2);
}

void write_circuit_files(const Circuit &c, const std::string &path) {
    write_file_atomically(path, format_circuit_text(c));
    write_file_atomically(path + ".json", circuit_metadata_json(c) + "\n");
}

}  // namespace dcqo
