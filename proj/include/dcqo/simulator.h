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


#ifndef DCQO_SIMULATOR_H
#define DCQO_SIMULATOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dcqo/circuit.h"
#include "dcqo/ising.h"
#include "dcqo/schedule.h"

namespace dcqo {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxStateWidth = 26;

/// Dense state over n qubits. Index bit k is qubit k (little-endian).
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t n);

    std::size_t width() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::vector<Amplitude> &amplitudes() {
        return amps_;
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    Amplitude operator[](std::size_t x) const {
        return amps_[x];
    }
    double norm() const;

   private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

StateVector zero_state(std::size_t n);
StateVector basis_state(std::size_t n, Bitstring x);
/// Every amplitude 2^(-n/2).
StateVector uniform_state(std::size_t n);

void apply_gate(StateVector &s, const Gate &g);
void run_in_place(const Circuit &c, StateVector &s);
StateVector run(const Circuit &c, StateVector s);
/// Runs c on |0...0>.
StateVector run(const Circuit &c);

/// True when every gate is H, RY, RYZ, RZY or CX. Such a circuit maps
/// |0...0> to a state with real amplitudes.
bool is_real_circuit(const Circuit &c);
/// Real amplitudes of c applied to |0...0>; throws unless is_real_circuit(c).
std::vector<double> run_real(const Circuit &c);
/// sum_x a_x^2 E_x for real amplitudes a.
double real_expectation(std::span<const double> amplitudes, std::span<const double> energies);

/// Dense 2x2 (row-major) or 4x4 matrix of a gate. For two-qubit gates the
/// local basis index is bit(qubits[0]) + 2 bit(qubits[1]).
std::vector<Amplitude> gate_matrix(const Gate &g);

std::vector<double> probability_vector(const StateVector &s);
OutcomeDistribution probabilities(const StateVector &s);

/// Multinomial draw of `shots` outcomes, deterministic per seed.
OutcomeDistribution sample(const StateVector &s, std::uint64_t shots, std::uint64_t seed);

/// sum_x |psi_x|^2 E(x), offset included.
double expectation(const StateVector &s, const IsingModel &m);
/// Same with precomputed diagonal_energies(m).
double expectation(const StateVector &s, std::span<const double> energies);

enum class EvolutionVariant { kAnneal, kFull, kCdOnly };

std::string to_string(EvolutionVariant v);
/// "anneal", "full", "cd-only".
EvolutionVariant parse_evolution_variant(const std::string &name);

inline constexpr std::size_t kMaxExactWidth = 12;

/// Continuous evolution from the uniform state under
///   anneal:  (1 - lambda) H_i + lambda H_p,       H_i = -sum X
///   full:    anneal + lambda_dot A,
///   cd-only: lambda_dot A,
/// with A = i alpha_1 [H_i, H_p] and the analytic lambda_dot. Integrated with
/// a fourth-order Magnus step on `grid` uniform slices; each slice is
/// exponentiated through a Hermitian eigendecomposition.
StateVector exact_evolve(const IsingModel &m, EvolutionVariant variant, double T, int grid,
                         CdNormalization norm = CdNormalization::kVariational);

}  // namespace dcqo

#endif
