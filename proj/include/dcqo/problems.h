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


#ifndef DCQO_PROBLEMS_H
#define DCQO_PROBLEMS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcqo/ising.h"

namespace dcqo {

// --------------------------------------------------------------------- TSP

struct TspInstance {
    std::size_t n = 0;
    std::vector<double> d;  // row-major n x n
    double penalty = 0.0;
    std::vector<std::string> cities;

    double distance(std::size_t a, std::size_t b) const {
        return d[a * n + b];
    }

    /// Validates d (finite, nonnegative, symmetric, zero diagonal). A penalty
    /// of 0 selects default_tsp_penalty.
    static TspInstance make(std::size_t n, std::vector<double> d, double penalty = 0.0);
};

/// n * max_{a,b} d_ab, or 1 when every distance is zero.
double default_tsp_penalty(std::size_t n, const std::vector<double> &d);

/// Variable x_{t,c} ("city c at time t") has index t * n + c.
inline std::size_t tsp_variable(std::size_t t, std::size_t c, std::size_t n) {
    return t * n + c;
}

/// A sum_t (1 - sum_c x_tc)^2 + A sum_c (1 - sum_t x_tc)^2
///   + sum_{c != c'} d_cc' sum_t x_{t,c} x_{t+1 mod n, c'}.
/// The constant 2nA goes into the offset, so a feasible assignment costs
/// exactly its cyclic tour length.
QuboProblem tsp_to_qubo(const TspInstance &t);

struct Path {
    std::vector<std::size_t> cities;  // city visited at t = 0, 1, ...
    double length = 0.0;
};

struct TspDecoding {
    std::optional<Path> path;
    /// Empty when feasible, otherwise names the first violated constraint.
    std::string violation;

    bool feasible() const {
        return path.has_value();
    }
};

TspDecoding decode_tsp(Bitstring x, std::size_t n);
/// Parses a '0'/'1' string of length n^2 (spaces allowed), time-major.
TspDecoding decode_tsp(std::string_view bits, std::size_t n);
/// Fills Path::length from the instance.
TspDecoding decode_tsp(Bitstring x, const TspInstance &t);

/// Cyclic tour length.
double tour_length(const TspInstance &t, const std::vector<std::size_t> &cities);

/// One-hot bitstring of a tour.
Bitstring encode_tour(const std::vector<std::size_t> &cities);

/// {"cities": [...], "distances": [[...]]} or {"coordinates": [[x, y], ...]},
/// optional "penalty".
TspInstance parse_tsp_json(std::string_view text);
TspInstance load_tsp_json(const std::string &path);

// ----------------------------------------------------- dense sub-QUBOs, LNS

/// Every entry of the upper triangle (diagonal included) drawn from
/// Uniform(-1, 1); off-diagonal draws of exactly zero are redrawn.
QuboProblem dense_qubo_instance(std::size_t n, std::uint64_t seed);

using Assignment = std::vector<std::uint8_t>;

struct SubQubo {
    QuboProblem problem;
    /// problem variable k is full variable variables[k].
    std::vector<std::size_t> variables;
};

enum class DecompositionStrategy {
    /// Seed with the uncovered variable of largest total |Q|, then add the
    /// variable with the largest total |Q| into the current subset.
    kGreedyCoupling,
    /// Consecutive index blocks.
    kSequential,
};

std::string to_string(DecompositionStrategy s);

/// Size-k sub-QUBOs that together cover every variable. Variables outside
/// a subset are clamped to `incumbent`; their cross terms become diagonal
/// entries and the rest of the cost becomes the offset, so
/// sub.evaluate(y) == q.evaluate(merge(incumbent, y)).
std::vector<SubQubo> decompose_qubo(const QuboProblem &q, std::size_t k, const Assignment &incumbent,
                                    DecompositionStrategy strategy = DecompositionStrategy::kGreedyCoupling);

Assignment merge_assignment(const Assignment &incumbent, const SubQubo &sub, const Assignment &sub_solution);

using SubSolver = std::function<Assignment(const QuboProblem &)>;

/// Exhaustive subsolver (k <= 24).
SubSolver brute_force_subsolver();
/// Cd-only DCQO with N steps; returns the lowest-cost outcome among the
/// `candidates` most probable ones.
SubSolver dcqo_subsolver(int N, std::size_t candidates = 20);

/// Greedy best-improvement bit flips from all zeros.
Assignment greedy_descent(const QuboProblem &q);

struct LnsResult {
    Assignment assignment;
    double cost = 0.0;
    /// Incumbent cost at the start and after every subproblem solve.
    std::vector<double> trace;
    int subproblems_solved = 0;
    int sweeps = 0;
};

/// Decompose, solve, keep strict improvements, repeat until a full sweep
/// improves nothing or `budget` subproblem solves have been spent.
LnsResult lns_solve(const QuboProblem &q, std::size_t k, const SubSolver &subsolver, int budget,
                    DecompositionStrategy strategy = DecompositionStrategy::kGreedyCoupling);

}  // namespace dcqo

#endif
