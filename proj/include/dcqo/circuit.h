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


#ifndef DCQO_CIRCUIT_H
#define DCQO_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcqo/ising.h"
#include "dcqo/schedule.h"

namespace dcqo {

/// Rotations follow R_P(theta) = exp(-i theta P / 2). For the two-qubit words
/// the first letter acts on qubits[0]: RYZ(theta) = exp(-i theta/2 Y_q0 Z_q1).
/// Native trapped-ion gates:
///   MS(phi0, phi1, theta) = exp(-i theta/2 (cos phi0 X + sin phi0 Y)(cos phi1 X + sin phi1 Y))
///   GPI(phi)  = exp(-i pi/2 (cos phi X + sin phi Y))
///   GPI2(phi) = exp(-i pi/4 (cos phi X + sin phi Y))
enum class GateKind : std::uint8_t {
    kH,
    kRX,
    kRY,
    kRZ,
    kRZZ,
    kRYZ,
    kRZY,
    kRYY,
    kCX,
    kMS,
    kGPI,
    kGPI2,
};

inline constexpr std::size_t kNumGateKinds = 12;

std::string_view gate_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
std::size_t gate_arity(GateKind kind);
std::size_t gate_param_count(GateKind kind);
bool is_rotation(GateKind kind);

struct Gate {
    GateKind kind = GateKind::kH;
    std::array<std::uint32_t, 2> qubits{0, 0};
    std::array<double, 3> params{0.0, 0.0, 0.0};
    /// Trotter step or ansatz layer that emitted the gate; 0 for state
    /// preparation and for hand-built circuits.
    std::int32_t step = 0;

    std::size_t arity() const {
        return gate_arity(kind);
    }
    /// Rotation angle of RX..RYY and MS; 0 for other kinds.
    double angle() const;

    bool operator==(const Gate &) const = default;

    static Gate h(std::uint32_t q);
    static Gate rx(std::uint32_t q, double theta);
    static Gate ry(std::uint32_t q, double theta);
    static Gate rz(std::uint32_t q, double theta);
    static Gate rzz(std::uint32_t a, std::uint32_t b, double theta);
    static Gate ryz(std::uint32_t a, std::uint32_t b, double theta);
    static Gate rzy(std::uint32_t a, std::uint32_t b, double theta);
    static Gate ryy(std::uint32_t a, std::uint32_t b, double theta);
    static Gate cx(std::uint32_t control, std::uint32_t target);
    static Gate ms(std::uint32_t a, std::uint32_t b, double phi0, double phi1, double theta);
    static Gate gpi(std::uint32_t q, double phi);
    static Gate gpi2(std::uint32_t q, double phi);
};

struct CircuitMetadata {
    std::string builder;
    std::string gate_set = "abstract";
    double T = 0.0;
    int steps = 0;
    std::string normalization;
    /// Per-step CD strength |f_m 2 alpha_1|, index m - 1 (DCQO builders only).
    std::vector<double> step_coefficients;

    bool gate_cutoff_applied = false;
    double gate_cutoff = 0.0;
    std::size_t gates_removed = 0;
    std::size_t gates_kept = 0;

    bool step_cutoff_applied = false;
    double step_cutoff = 0.0;
    std::vector<int> steps_dropped;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t width);

    std::size_t width() const {
        return width_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// Validates qubit indices, distinctness and finiteness of parameters.
    void append(const Gate &g);

    CircuitMetadata metadata;

    /// Equal gate lists and width; metadata is ignored.
    bool same_gates(const Circuit &other) const;

   private:
    std::size_t width_ = 0;
    std::vector<Gate> gates_;
};

// ---------------------------------------------------------------- builders

/// Digitized annealing of (1 - lambda) H_i + lambda H_p with H_i = -sum X.
/// Step m applies RX(-2 dt (1 - lambda)) on every qubit, RZ(2 dt lambda h_i),
/// then RZZ(2 dt lambda J_ij), with lambda = lambda(m dt).
Circuit build_dqa_circuit(const IsingModel &m, double T, int N);

enum class DcqoVariant { kCdOnly, kFull };

std::string to_string(DcqoVariant v);

struct DcqoOptions {
    DcqoVariant variant = DcqoVariant::kCdOnly;
    /// Used by the full variant only.
    double T = 0.0;
    CdNormalization normalization = CdNormalization::kVariational;
};

/// Impulse-regime product of CD steps. Each step applies RY(2 theta) per
/// field term, then per coupling RYZ(2 theta) followed by RZY(2 theta), with
/// theta from cd_step_angles. The full variant prepends the DQA step.
Circuit build_dcqo_circuit(const IsingModel &m, int N, const DcqoOptions &options);
Circuit build_dcqo_circuit(const IsingModel &m, int N, DcqoVariant variant, double T = 0.0);

/// QAOA with params [gamma_1, beta_1, gamma_2, beta_2, ...]. Layer l applies
/// RZ(2 gamma h_i), RZZ(2 gamma J_ij) and RX(2 beta) on every qubit.
Circuit build_qaoa_circuit(const IsingModel &m, int p, std::span<const double> params);

enum class AnsatzVariant { kTwoParam, kPerOneBody, kYzyOnly };

std::string to_string(AnsatzVariant v);
AnsatzVariant parse_ansatz_variant(std::string_view name);

struct AnsatzSpec {
    AnsatzVariant variant = AnsatzVariant::kTwoParam;
    int layers = 1;
    bool include_yz = true;

    static AnsatzSpec make(AnsatzVariant variant, int layers);
};

/// 2p for two-param, (n + 1)p otherwise.
std::size_t parameter_count(const AnsatzSpec &spec, std::size_t n);

/// Layer parameter layout:
///   two-param:             [alpha_l, beta_l]
///   per-one-body, y-zy-only: [alpha_{l,0}, ..., alpha_{l,n-1}, beta_l]
/// Layer l applies exp(-i a_i Y_i) for every qubit, where a_i = h_i alpha_l
/// (two-param) or alpha_{l,i}, then per coupling exp(-i beta_l J_ij Y_i Z_j)
/// followed by exp(-i beta_l J_ij Z_i Y_j). The YZ factor is omitted when
/// include_yz is false.
Circuit build_hdcqo_circuit(const IsingModel &m, const AnsatzSpec &spec, std::span<const double> params);

// ------------------------------------------------------------- compression

/// Folds every rotation angle into [-pi, pi] and drops rotations whose folded
/// magnitude is below threshold. MS is judged by its theta.
Circuit apply_gate_cutoff(const Circuit &c, double threshold);

/// Drops every gate of the Trotter steps whose recorded CD strength is below
/// threshold. Requires a circuit from build_dcqo_circuit.
Circuit apply_step_cutoff(const Circuit &c, double threshold);

// ----------------------------------------------------------- transpilation

/// CX + single-qubit rotations. RZZ becomes CX RZ CX. An RYZ immediately
/// followed by an RZY on the same ordered pair is fused into one 2-CX block;
/// with fuse = false each of them is lowered on its own (2 CX each).
Circuit lower_to_cx(const Circuit &c, bool fuse = true);

/// MS + GPI/GPI2. Every two-qubit Pauli rotation becomes one MS with GPI or
/// GPI2 dressing; single-qubit rotations and H are kept as they are.
Circuit lower_to_ms(const Circuit &c);

struct GateCounts {
    std::array<std::size_t, kNumGateKinds> by_kind{};
    std::size_t two_qubit = 0;
    std::size_t total = 0;

    std::size_t of(GateKind k) const {
        return by_kind[static_cast<std::size_t>(k)];
    }
};

GateCounts count_gates(const Circuit &c);

// -------------------------------------------------------------------- I/O

/// First line `qubits <n>`, then one gate per line: `KIND q0 [q1] params...`.
std::string format_circuit_text(const Circuit &c);
Circuit parse_circuit_text(std::string_view text);
/// JSON object describing builder settings and cutoff statistics.
std::string circuit_metadata_json(const Circuit &c);
/// Writes `<path>` (gate list) and `<path>.json` (metadata).
void write_circuit_files(const Circuit &c, const std::string &path);

}  // namespace dcqo

#endif
