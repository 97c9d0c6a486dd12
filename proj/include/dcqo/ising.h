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

#ifndef DCQO_ISING_H
#define DCQO_ISING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcqo/bitstring.h"

namespace dcqo {

/// Cost f(x) = x^T Q x + offset over binary x, with Q symmetric.
struct QuboProblem {
    std::size_t n = 0;
    std::vector<double> q;  // row-major n x n
    double offset = 0.0;
    std::string name;

    double at(std::size_t i, std::size_t j) const {
        return q[i * n + j];
    }

    double evaluate(Bitstring x) const;
    double evaluate(std::span<const std::uint8_t> x) const;

    /// Validates and symmetrizes. Entries whose transpose differs by more than
    /// 1e-12 (relative to max(1, |Q|_max)) are rejected.
    static QuboProblem from_matrix(std::size_t n, std::vector<double> q, double offset = 0.0);
};

/// Text format: first non-comment line is `n`, then one `i j value` line per
/// entry with 0 <= i <= j < n. `value` is the matrix entry Q_ij (= Q_ji), so
/// an off-diagonal line contributes 2 * value * x_i * x_j to the cost. `#`
/// starts a comment. Repeated (i, j) pairs are rejected.
QuboProblem parse_qubo_text(std::string_view text);
QuboProblem load_qubo_file(const std::string &path);
std::string format_qubo_text(const QuboProblem &q);

struct Coupling {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    double value = 0.0;

    bool operator==(const Coupling &) const = default;
};

/// H = sum_{i<j} J_ij z_i z_j + sum_i h_i z_i + offset.
struct IsingModel {
    std::size_t n = 0;
    std::vector<double> h;
    std::vector<Coupling> couplings;  // i < j, sorted lexicographically, unique
    double offset = 0.0;

    /// Sorts couplings, rejects i >= j, out-of-range indices and duplicates.
    /// Exactly-zero couplings are dropped.
    static IsingModel make(std::size_t n, std::vector<double> h, std::vector<Coupling> couplings,
                           double offset = 0.0);

    /// Symmetric n x n matrix of couplings with zero diagonal.
    std::vector<double> dense_couplings() const;
};

/// Bit/spin convention x_i = (1 - z_i) / 2. Gives J_ij = Q_ij / 2,
/// h_i = -Q_ii / 2 - sum_{j != i} Q_ij / 2 and folds the remaining constants
/// into the offset, so f(x) == ising_energy(model, x).
IsingModel qubo_to_ising(const QuboProblem &q);

/// Includes the offset. Bits at positions >= m.n must be clear.
double ising_energy(const IsingModel &m, Bitstring x);
/// Same, from a '0'/'1' string whose length must equal m.n.
double ising_energy(const IsingModel &m, std::string_view bits);

/// Energies of all 2^n basis states (offset included), indexed by Bitstring.
std::vector<double> diagonal_energies(const IsingModel &m);

inline constexpr std::size_t kMaxBruteForceWidth = 24;
inline constexpr std::size_t kMaxSpectrumWidth = 20;

struct GroundStateSet {
    std::size_t n = 0;
    double energy = 0.0;
    std::vector<Bitstring> bitstrings;  // ascending
    std::vector<double> spectrum;       // all 2^n energies sorted, when requested

    bool contains(Bitstring x) const;
};

/// Exhaustive minimum. States within 1e-9 * max(1, |E_min|) of the minimum
/// count as degenerate ground states.
GroundStateSet brute_force_solve(const IsingModel &m, bool with_spectrum = false);
GroundStateSet ground_states_from_energies(std::size_t n, std::span<const double> energies,
                                           bool with_spectrum = false);

struct Outcome {
    Bitstring bits = 0;
    double probability = 0.0;
};

/// Probabilities over n-bit outcomes, stored sparsely and sorted by bitstring.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;

    /// Exact distribution from a dense probability vector of length 2^n;
    /// zero entries are dropped. Mass must be within 1e-9 of one.
    static OutcomeDistribution from_probabilities(std::size_t n, std::span<const double> dense);
    /// Exact distribution from explicit entries (duplicates rejected).
    static OutcomeDistribution from_entries(std::size_t n, std::vector<Outcome> entries);
    /// Empirical frequencies; counts must sum to shots.
    static OutcomeDistribution from_counts(std::size_t n, std::vector<std::pair<Bitstring, std::uint64_t>> counts,
                                           std::uint64_t shots);

    std::size_t width() const {
        return n_;
    }
    bool is_sampled() const {
        return shots_ > 0;
    }
    std::uint64_t shots() const {
        return shots_;
    }
    const std::vector<Outcome> &entries() const {
        return entries_;
    }

    double probability(Bitstring x) const;
    /// Exactly 1 for sampled distributions (computed from integer counts).
    double total_mass() const;
    /// Highest-probability outcomes, ties broken by smaller bitstring.
    std::vector<Outcome> top(std::size_t k) const;
    Bitstring most_probable() const;

   private:
    std::size_t n_ = 0;
    std::uint64_t shots_ = 0;
    std::uint64_t count_total_ = 0;
    std::vector<Outcome> entries_;
};

double success_probability(const OutcomeDistribution &d, const GroundStateSet &g);

double mean_energy(const OutcomeDistribution &d, const IsingModel &m);

/// Raised when the ground energy is zero and the ratio is meaningless.
class UndefinedMetricError : public std::domain_error {
   public:
    UndefinedMetricError(const std::string &what, double mean_energy)
        : std::domain_error(what), mean_energy_(mean_energy) {
    }
    double mean_energy() const {
        return mean_energy_;
    }

   private:
    double mean_energy_;
};

/// mean energy / ground energy. Not clamped: a distribution whose mean sits
/// on the opposite side of zero from the ground energy gives a negative value.
double approximation_ratio(const OutcomeDistribution &d, const IsingModel &m, const GroundStateSet &g);
double approximation_ratio(const OutcomeDistribution &d, const IsingModel &m);

/// Fully connected model with h_i and J_ij drawn from Uniform(-1, 1), in the
/// order h_0..h_{n-1} then J_ij lexicographically.
IsingModel random_spin_glass(std::size_t n, std::uint64_t seed);

}  // namespace dcqo

#endif
