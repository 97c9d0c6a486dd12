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
#include <stdexcept>

#include "dcqo/circuit.h"

namespace dcqo {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
    std::size_t params;
    bool rotation;
};

constexpr std::array<KindInfo, kNumGateKinds> kKinds{{
    {GateKind::kH, "H", 1, 0, false},
    {GateKind::kRX, "RX", 1, 1, true},
    {GateKind::kRY, "RY", 1, 1, true},
    {GateKind::kRZ, "RZ", 1, 1, true},
    {GateKind::kRZZ, "RZZ", 2, 1, true},
    {GateKind::kRYZ, "RYZ", 2, 1, true},
    {GateKind::kRZY, "RZY", 2, 1, true},
    {GateKind::kRYY, "RYY", 2, 1, true},
    {GateKind::kCX, "CX", 2, 0, false},
    {GateKind::kMS, "MS", 2, 3, true},
    {GateKind::kGPI, "GPI", 1, 1, false},
    {GateKind::kGPI2, "GPI2", 1, 1, false},
}};

const KindInfo &info(GateKind k) {
    return kKinds[static_cast<std::size_t>(k)];
}

Gate one(GateKind k, std::uint32_t q, double p = 0.0) {
    Gate g;
    g.kind = k;
    g.qubits = {q, 0};
    g.params = {p, 0.0, 0.0};
    return g;
}

Gate two(GateKind k, std::uint32_t a, std::uint32_t b, double p = 0.0) {
    Gate g;
    g.kind = k;
    g.qubits = {a, b};
    g.params = {p, 0.0, 0.0};
    return g;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

GateKind parse_gate_kind(std::string_view name) {
    for (const KindInfo &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) {
    return info(kind).arity;
}

std::size_t gate_param_count(GateKind kind) {
    return info(kind).params;
}

bool is_rotation(GateKind kind) {
    return info(kind).rotation;
}

double Gate::angle() const {
    if (kind == GateKind::kMS) {
        return params[2];
    }
    return is_rotation(kind) ? params[0] : 0.0;
}

Gate Gate::h(std::uint32_t q) {
    return one(GateKind::kH, q);
}
Gate Gate::rx(std::uint32_t q, double theta) {
    return one(GateKind::kRX, q, theta);
}
Gate Gate::ry(std::uint32_t q, double theta) {
    return one(GateKind::kRY, q, theta);
}
Gate Gate::rz(std::uint32_t q, double theta) {
    return one(GateKind::kRZ, q, theta);
}
Gate Gate::rzz(std::uint32_t a, std::uint32_t b, double theta) {
    return two(GateKind::kRZZ, a, b, theta);
}
Gate Gate::ryz(std::uint32_t a, std::uint32_t b, double theta) {
    return two(GateKind::kRYZ, a, b, theta);
}
Gate Gate::rzy(std::uint32_t a, std::uint32_t b, double theta) {
    return two(GateKind::kRZY, a, b, theta);
}
Gate Gate::ryy(std::uint32_t a, std::uint32_t b, double theta) {
    return two(GateKind::kRYY, a, b, theta);
}
Gate Gate::cx(std::uint32_t control, std::uint32_t target) {
    return two(GateKind::kCX, control, target);
}
Gate Gate::ms(std::uint32_t a, std::uint32_t b, double phi0, double phi1, double theta) {
    Gate g = two(GateKind::kMS, a, b);
    g.params = {phi0, phi1, theta};
    return g;
}
Gate Gate::gpi(std::uint32_t q, double phi) {
    return one(GateKind::kGPI, q, phi);
}
Gate Gate::gpi2(std::uint32_t q, double phi) {
    return one(GateKind::kGPI2, q, phi);
}

Circuit::Circuit(std::size_t width) : width_(width) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be positive");
    }
}

void Circuit::append(const Gate &g) {
    std::size_t arity = g.arity();
    for (std::size_t k = 0; k < arity; k++) {
        if (g.qubits[k] >= width_) {
            throw std::invalid_argument(std::string(gate_name(g.kind)) + " on qubit " +
                                        std::to_string(g.qubits[k]) + " exceeds width " +
                                        std::to_string(width_));
        }
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " needs two distinct qubits");
    }
    for (std::size_t k = 0; k < gate_param_count(g.kind); k++) {
        if (!std::isfinite(g.params[k])) {
            throw std::invalid_argument(std::string(gate_name(g.kind)) + " has a non-finite parameter");
        }
    }
    Gate stored = g;
    if (arity == 1) {
        stored.qubits[1] = 0;
    }
    for (std::size_t k = gate_param_count(g.kind); k < stored.params.size(); k++) {
        stored.params[k] = 0.0;
    }
    gates_.push_back(stored);
}

bool Circuit::same_gates(const Circuit &other) const {
    return width_ == other.width_ && gates_ == other.gates_;
}

}  // namespace dcqo
