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


#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcqo/circuit.h"
#include "dcqo/problems.h"
#include "dcqo/simulator.h"

namespace dcqo {

QuboProblem dense_qubo_instance(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("dense_qubo_instance: n must be positive");
    }
    Rng rng(seed);
    std::vector<double> q(n * n, 0.0);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            double v = rng.uniform(-1.0, 1.0);
            while (i != j && v == 0.0) {
                v = rng.uniform(-1.0, 1.0);
            }
            q[i * n + j] = v;
            q[j * n + i] = v;
        }
    }
    QuboProblem out = QuboProblem::from_matrix(n, std::move(q));
    out.name = "dense" + std::to_string(n) + "-seed" + std::to_string(seed);
    return out;
}

std::string to_string(DecompositionStrategy s) {
    return s == DecompositionStrategy::kGreedyCoupling ? "greedy-coupling" : "sequential";
}

namespace {

std::vector<std::vector<std::size_t>> select_subsets(const QuboProblem &q, std::size_t k,
                                                     DecompositionStrategy strategy) {
    std::size_t n = q.n;
    std::vector<std::vector<std::size_t>> subsets;
    if (strategy == DecompositionStrategy::kSequential) {
        for (std::size_t start = 0; start < n; start += k) {
            std::size_t lo = std::min(start, n - k);
            std::vector<std::size_t> s;
            for (std::size_t v = lo; v < lo + k; v++) {
                s.push_back(v);
            }
            subsets.push_back(std::move(s));
        }
        return subsets;
    }
    std::vector<double> degree(n, 0.0);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (i != j) {
                degree[i] += std::abs(q.at(i, j));
            }
        }
    }
    std::vector<bool> covered(n, false);
    std::size_t n_covered = 0;
    while (n_covered < n) {
        std::vector<bool> in(n, false);
        std::vector<double> link(n, 0.0);
        std::vector<std::size_t> s;
        auto add = [&](std::size_t v) {
            in[v] = true;
            s.push_back(v);
            if (!covered[v]) {
                covered[v] = true;
                n_covered++;
            }
            for (std::size_t u = 0; u < n; u++) {
                if (u != v) {
                    link[u] += std::abs(q.at(u, v));
                }
            }
        };
        std::size_t seed = n;
        for (std::size_t v = 0; v < n; v++) {
            if (!covered[v] && (seed == n || degree[v] > degree[seed])) {
                seed = v;
            }
        }
        add(seed);
        while (s.size() < k) {
            std::size_t best = n;
            for (std::size_t v = 0; v < n; v++) {
                if (in[v]) {
                    continue;
                }
                if (best == n) {
                    best = v;
                    continue;
                }
                auto key = [&](std::size_t u) { return std::make_tuple(link[u], !covered[u], degree[u]); };
                if (key(v) > key(best)) {
                    best = v;
                }
            }
            add(best);
        }
        std::sort(s.begin(), s.end());
        subsets.push_back(std::move(s));
    }
    return subsets;
}

}  // namespace

std::vector<SubQubo> decompose_qubo(const QuboProblem &q, std::size_t k, const Assignment &incumbent,
                                    DecompositionStrategy strategy) {
    if (k < 1 || k > q.n) {
        throw std::invalid_argument("subproblem size k must be in [1, n]");
    }
    if (incumbent.size() != q.n) {
        throw std::invalid_argument("incumbent length does not match the QUBO");
    }
    std::vector<SubQubo> out;
    for (std::vector<std::size_t> &vars : select_subsets(q, k, strategy)) {
        std::vector<bool> in(q.n, false);
        for (std::size_t v : vars) {
            in[v] = true;
        }
        std::vector<double> sub(k * k, 0.0);
        for (std::size_t a = 0; a < k; a++) {
            for (std::size_t b = 0; b < k; b++) {
                sub[a * k + b] = q.at(vars[a], vars[b]);
            }
            double linear = 0.0;
            for (std::size_t u = 0; u < q.n; u++) {
                if (!in[u] && incumbent[u]) {
                    linear += 2.0 * q.at(vars[a], u);
                }
            }
            sub[a * k + a] += linear;
        }
        double offset = q.offset;
        for (std::size_t u = 0; u < q.n; u++) {
            if (in[u] || !incumbent[u]) {
                continue;
            }
            offset += q.at(u, u);
            for (std::size_t v = u + 1; v < q.n; v++) {
                if (!in[v] && incumbent[v]) {
                    offset += 2.0 * q.at(u, v);
                }
            }
        }
        SubQubo s;
        s.problem = QuboProblem::from_matrix(k, std::move(sub), offset);
        s.variables = std::move(vars);
        out.push_back(std::move(s));
    }
    return out;
}

Assignment merge_assignment(const Assignment &incumbent, const SubQubo &sub, const Assignment &sub_solution) {
    if (sub_solution.size() != sub.variables.size()) {
        throw std::invalid_argument("subproblem solution has the wrong length");
    }
    Assignment out = incumbent;
    for (std::size_t a = 0; a < sub.variables.size(); a++) {
        out[sub.variables[a]] = sub_solution[a] ? 1 : 0;
    }
    return out;
}

namespace {

Assignment to_assignment(Bitstring x, std::size_t n) {
    Assignment a(n);
    for (std::size_t k = 0; k < n; k++) {
        a[k] = bit_at(x, k) ? 1 : 0;
    }
    return a;
}

}  // namespace

SubSolver brute_force_subsolver() {
    return [](const QuboProblem &q) {
        IsingModel m = qubo_to_ising(q);
        GroundStateSet g = brute_force_solve(m);
        return to_assignment(g.bitstrings.front(), q.n);
    };
}

SubSolver dcqo_subsolver(int N, std::size_t candidates) {
    if (N < 1 || candidates < 1) {
        throw std::invalid_argument("dcqo_subsolver needs N >= 1 and at least one candidate");
    }
    return [N, candidates](const QuboProblem &q) {
        IsingModel m = qubo_to_ising(q);
        StateVector s = run(build_dcqo_circuit(m, N, DcqoVariant::kCdOnly));
        OutcomeDistribution d = probabilities(s);
        Bitstring best = 0;
        double best_e = 0.0;
        bool have = false;
        for (const Outcome &o : d.top(candidates)) {
            double e = ising_energy(m, o.bits);
            if (!have || e < best_e) {
                have = true;
                best = o.bits;
                best_e = e;
            }
        }
        return to_assignment(best, q.n);
    };
}

Assignment greedy_descent(const QuboProblem &q) {
    Assignment x(q.n, 0);
    // delta of flipping i: (1 - 2 x_i) (Q_ii + 2 sum_{j != i} Q_ij x_j)
    while (true) {
        std::size_t best = q.n;
        double best_delta = 0.0;
        for (std::size_t i = 0; i < q.n; i++) {
            double field = q.at(i, i);
            for (std::size_t j = 0; j < q.n; j++) {
                if (j != i && x[j]) {
                    field += 2.0 * q.at(i, j);
                }
            }
            double delta = (x[i] ? -1.0 : 1.0) * field;
            if (delta < best_delta - 1e-12) {
                best_delta = delta;
                best = i;
            }
        }
        if (best == q.n) {
            return x;
        }
        x[best] ^= 1;
    }
}

LnsResult lns_solve(const QuboProblem &q, std::size_t k, const SubSolver &subsolver, int budget,
                    DecompositionStrategy strategy) {
    if (budget < 0) {
        throw std::invalid_argument("budget must be nonnegative");
    }
    if (k < 1 || k > q.n) {
        throw std::invalid_argument("subproblem size k must be in [1, n]");
    }
    LnsResult r;
    r.assignment = greedy_descent(q);
    r.cost = q.evaluate(std::span<const std::uint8_t>(r.assignment));
    r.trace.push_back(r.cost);
    while (r.subproblems_solved < budget) {
        r.sweeps++;
        bool improved = false;
        std::size_t count = decompose_qubo(q, k, r.assignment, strategy).size();
        for (std::size_t j = 0; j < count && r.subproblems_solved < budget; j++) {
            // Subsets depend only on Q; clamp against the current incumbent.
            SubQubo sub = decompose_qubo(q, k, r.assignment, strategy)[j];
            Assignment y = subsolver(sub.problem);
            r.subproblems_solved++;
            Assignment merged = merge_assignment(r.assignment, sub, y);
            double cost = q.evaluate(std::span<const std::uint8_t>(merged));
            if (cost < r.cost - 1e-12 * std::max(1.0, std::abs(r.cost))) {
                r.assignment = std::move(merged);
                r.cost = cost;
                improved = true;
            }
            r.trace.push_back(r.cost);
        }
        if (!improved) {
            break;
        }
    }
    return r;
}

}  // namespace dcqo
