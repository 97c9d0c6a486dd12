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


#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcqo/circuit.h"

namespace dcqo {

namespace {

using std::numbers::pi;

void push(Circuit &out, Gate g, int step) {
    g.step = step;
    out.append(g);
}

// Maps X_a X_b -> Y_a Z_b and Z_a Z_b -> Z_a Y_b, so that
// V^dag exp(-i(x XX + z ZZ)) V = exp(-i(x YZ + z ZY)).
void yz_frame_in(Circuit &out, std::uint32_t a, std::uint32_t b, int step) {
    push(out, Gate::rz(a, -pi / 2), step);
    push(out, Gate::rz(b, -pi / 2), step);
    push(out, Gate::h(b), step);
}

void yz_frame_out(Circuit &out, std::uint32_t a, std::uint32_t b, int step) {
    push(out, Gate::h(b), step);
    push(out, Gate::rz(b, pi / 2), step);
    push(out, Gate::rz(a, pi / 2), step);
}

void yz_zy_block(Circuit &out, std::uint32_t a, std::uint32_t b, const double *yz, const double *zy, int step) {
    yz_frame_in(out, a, b, step);
    push(out, Gate::cx(a, b), step);
    if (yz != nullptr) {
        push(out, Gate::rx(a, *yz), step);
    }
    if (zy != nullptr) {
        push(out, Gate::rz(b, *zy), step);
    }
    push(out, Gate::cx(a, b), step);
    yz_frame_out(out, a, b, step);
}

void rzz_cx(Circuit &out, std::uint32_t a, std::uint32_t b, double theta, int step) {
    push(out, Gate::cx(a, b), step);
    push(out, Gate::rz(b, theta), step);
    push(out, Gate::cx(a, b), step);
}

bool same_pair(const Gate &x, const Gate &y) {
    return x.qubits == y.qubits;
}

void ryy_ms(Circuit &out, std::uint32_t a, std::uint32_t b, double theta, int step) {
    double t = std::fmod(theta, 2.0 * pi);
    if (t < 0.0) {
        t += 2.0 * pi;
    }
    if (t <= pi / 2) {
        push(out, Gate::ms(a, b, pi / 2, pi / 2, t), step);
    } else if (t <= pi) {
        push(out, Gate::gpi(a, pi / 2), step);
        push(out, Gate::gpi(b, pi / 2), step);
        push(out, Gate::ms(a, b, 3 * pi / 2, pi / 2, pi - t), step);
    } else if (t <= 3 * pi / 2) {
        push(out, Gate::gpi(a, pi / 2), step);
        push(out, Gate::gpi(b, pi / 2), step);
        push(out, Gate::ms(a, b, pi / 2, pi / 2, t - pi), step);
    } else {
        push(out, Gate::ms(a, b, 3 * pi / 2, pi / 2, 2 * pi - t), step);
    }
}

// Two-qubit Pauli rotation with letters in {Y, Z}. A Z letter is turned into
// Y by GPI2(pi) before and GPI2(0) after.
void pauli_pair_ms(Circuit &out, std::uint32_t a, std::uint32_t b, bool a_is_z, bool b_is_z, double theta,
                   int step) {
    if (a_is_z) {
        push(out, Gate::gpi2(a, pi), step);
    }
    if (b_is_z) {
        push(out, Gate::gpi2(b, pi), step);
    }
    ryy_ms(out, a, b, theta, step);
    if (a_is_z) {
        push(out, Gate::gpi2(a, 0.0), step);
    }
    if (b_is_z) {
        push(out, Gate::gpi2(b, 0.0), step);
    }
}

}  // namespace

Circuit lower_to_cx(const Circuit &c, bool fuse) {
    Circuit out(c.width());
    out.metadata = c.metadata;
    out.metadata.gate_set = "cx";
    const std::vector<Gate> &gates = c.gates();
    for (std::size_t k = 0; k < gates.size(); k++) {
        const Gate &g = gates[k];
        std::uint32_t a = g.qubits[0];
        std::uint32_t b = g.qubits[1];
        switch (g.kind) {
            case GateKind::kH:
            case GateKind::kRX:
            case GateKind::kRY:
            case GateKind::kRZ:
            case GateKind::kCX:
                out.append(g);
                break;
            case GateKind::kRZZ:
                rzz_cx(out, a, b, g.params[0], g.step);
                break;
            case GateKind::kRYZ:
            case GateKind::kRZY: {
                const double *yz = g.kind == GateKind::kRYZ ? &g.params[0] : nullptr;
                const double *zy = g.kind == GateKind::kRZY ? &g.params[0] : nullptr;
                if (fuse && k + 1 < gates.size() && same_pair(g, gates[k + 1])) {
                    const Gate &next = gates[k + 1];
                    // Y_aZ_b and Z_aY_b commute, so either order fuses.
                    if (next.kind == GateKind::kRYZ && yz == nullptr) {
                        yz = &next.params[0];
                        k++;
                    } else if (next.kind == GateKind::kRZY && zy == nullptr) {
                        zy = &next.params[0];
                        k++;
                    }
                }
                yz_zy_block(out, a, b, yz, zy, g.step);
                break;
            }
            case GateKind::kRYY:
                push(out, Gate::rx(a, pi / 2), g.step);
                push(out, Gate::rx(b, pi / 2), g.step);
                rzz_cx(out, a, b, g.params[0], g.step);
                push(out, Gate::rx(a, -pi / 2), g.step);
                push(out, Gate::rx(b, -pi / 2), g.step);
                break;
            case GateKind::kMS:
            case GateKind::kGPI:
            case GateKind::kGPI2:
                throw std::invalid_argument("lower_to_cx: cannot lower native " + std::string(gate_name(g.kind)));
        }
    }
    return out;
}

Circuit lower_to_ms(const Circuit &c) {
    Circuit out(c.width());
    out.metadata = c.metadata;
    out.metadata.gate_set = "ms";
    for (const Gate &g : c.gates()) {
        std::uint32_t a = g.qubits[0];
        std::uint32_t b = g.qubits[1];
        switch (g.kind) {
            case GateKind::kH:
            case GateKind::kRX:
            case GateKind::kRY:
            case GateKind::kRZ:
            case GateKind::kMS:
            case GateKind::kGPI:
            case GateKind::kGPI2:
                out.append(g);
                break;
            case GateKind::kRZZ:
                pauli_pair_ms(out, a, b, true, true, g.params[0], g.step);
                break;
            case GateKind::kRYZ:
                pauli_pair_ms(out, a, b, false, true, g.params[0], g.step);
                break;
            case GateKind::kRZY:
                pauli_pair_ms(out, a, b, true, false, g.params[0], g.step);
                break;
            case GateKind::kRYY:
                pauli_pair_ms(out, a, b, false, false, g.params[0], g.step);
                break;
            case GateKind::kCX:
                throw std::invalid_argument("lower_to_ms: CX is not an abstract Pauli rotation");
        }
    }
    return out;
}

GateCounts count_gates(const Circuit &c) {
    GateCounts counts;
    for (const Gate &g : c.gates()) {
        counts.by_kind[static_cast<std::size_t>(g.kind)]++;
        counts.total++;
        if (g.arity() == 2) {
            counts.two_qubit++;
        }
    }
    return counts;
}

}  // namespace dcqo
