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


#include "dcqo/variational.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcqo/simulator.h"

namespace dcqo {

namespace {

std::vector<double> random_params(std::size_t count, std::uint64_t seed, int restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    std::vector<double> x(count);
    for (double &v : x) {
        v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return x;
}

template <typename Build>
OptimizationResult optimize_restarts(const IsingModel &m, const OptimizerConfig &cfg, Build build,
                                     const std::vector<std::vector<double>> &starts) {
    std::vector<double> energies = diagonal_energies(m);
    CostFunction cost = [&](std::span<const double> x) {
        Circuit c = build(x);
        if (is_real_circuit(c)) {
            return real_expectation(run_real(c), energies);
        }
        StateVector s(m.n);
        run_in_place(c, s);
        return expectation(s, energies);
    };
    OptimizationResult out;
    bool have = false;
    for (std::size_t r = 0; r < starts.size(); r++) {
        MinimizeResult mr = minimize(cost, starts[r], cfg);
        out.restart_costs.push_back(mr.cost);
        out.evaluations += mr.evaluations;
        if (!have || mr.cost < out.best_cost) {
            have = true;
            out.best_cost = mr.cost;
            out.best_params = mr.x;
            out.trace = mr.trace;
            out.best_restart = static_cast<int>(r);
        }
    }
    evaluate_final_circuit(m, energies, build(out.best_params), out);
    return out;
}

}  // namespace

std::vector<double> warm_start_params(const IsingModel &m, const AnsatzSpec &spec, int N, CdNormalization norm) {
    if (spec.layers < 0) {
        throw std::invalid_argument("layer count must be nonnegative");
    }
    if (spec.layers > N) {
        throw std::invalid_argument("warm start needs layers <= N (" + std::to_string(spec.layers) + " > " +
                                    std::to_string(N) + ")");
    }
    std::vector<double> x;
    x.reserve(parameter_count(spec, m.n));
    for (int l = 1; l <= spec.layers; l++) {
        double scale = cd_step_scale(m, l, N, norm);
        if (spec.variant == AnsatzVariant::kTwoParam) {
            x.push_back(scale);
        } else {
            for (double h : m.h) {
                x.push_back(scale * h);
            }
        }
        x.push_back(scale);
    }
    return x;
}

void evaluate_final_circuit(const IsingModel &m, const std::vector<double> &energies, const Circuit &c,
                            OptimizationResult &out) {
    StateVector s = run(c);
    out.circuit = c;
    out.distribution = probabilities(s);
    out.mean_energy = expectation(s, energies);
    GroundStateSet g = ground_states_from_energies(m.n, energies);
    out.success_probability = success_probability(out.distribution, g);
    if (std::abs(g.energy) >= 1e-12) {
        out.approximation_ratio = out.mean_energy / g.energy;
    } else {
        out.approximation_ratio.reset();
    }
    out.abstract_counts = count_gates(c);
    out.cx_counts = count_gates(lower_to_cx(c));
    out.ms_counts = count_gates(lower_to_ms(c));
}

OptimizationResult run_hdcqo(const IsingModel &m, const AnsatzSpec &spec, const VariationalOptions &options) {
    options.optimizer.validate();
    std::size_t count = parameter_count(spec, m.n);
    std::vector<std::vector<double>> starts;
    for (int r = 0; r < options.optimizer.restarts; r++) {
        if (r == 0 && options.init == InitKind::kWarm) {
            int N = options.warm_steps > 0 ? options.warm_steps : spec.layers + 1;
            starts.push_back(warm_start_params(m, spec, N, options.normalization));
        } else {
            starts.push_back(random_params(count, options.optimizer.seed, r));
        }
    }
    auto build = [&](std::span<const double> x) { return build_hdcqo_circuit(m, spec, x); };
    return optimize_restarts(m, options.optimizer, build, starts);
}

OptimizationResult run_qaoa(const IsingModel &m, int p, const OptimizerConfig &cfg) {
    cfg.validate();
    if (p < 1) {
        throw std::invalid_argument("QAOA needs p >= 1");
    }
    std::vector<std::vector<double>> starts;
    for (int r = 0; r < cfg.restarts; r++) {
        starts.push_back(random_params(static_cast<std::size_t>(2 * p), cfg.seed, r));
    }
    auto build = [&](std::span<const double> x) { return build_qaoa_circuit(m, p, x); };
    return optimize_restarts(m, cfg, build, starts);
}

}  // namespace dcqo
