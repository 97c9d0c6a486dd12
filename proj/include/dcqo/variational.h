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


#ifndef DCQO_VARIATIONAL_H
#define DCQO_VARIATIONAL_H

#include <optional>
#include <string>
#include <vector>

#include "dcqo/circuit.h"
#include "dcqo/ising.h"
#include "dcqo/optimizer.h"
#include "dcqo/schedule.h"

namespace dcqo {

/// Layer l takes the CD angles of step l of an N-step schedule. The
/// resulting h-DCQO circuit applies exactly the DCQO step-l rotations.
std::vector<double> warm_start_params(const IsingModel &m, const AnsatzSpec &spec, int N,
                                      CdNormalization norm = CdNormalization::kVariational);

enum class InitKind { kWarm, kRandom };

struct VariationalOptions {
    OptimizerConfig optimizer;
    InitKind init = InitKind::kWarm;
    /// Schedule length for warm starts; 0 means layers + 1.
    int warm_steps = 0;
    CdNormalization normalization = CdNormalization::kVariational;
};

struct OptimizationResult {
    std::vector<double> best_params;
    double best_cost = 0.0;
    /// Trace of the winning restart.
    std::vector<double> trace;
    int best_restart = 0;
    std::vector<double> restart_costs;
    int evaluations = 0;

    Circuit circuit;
    OutcomeDistribution distribution;
    double success_probability = 0.0;
    std::optional<double> approximation_ratio;
    double mean_energy = 0.0;
    GateCounts abstract_counts;
    GateCounts cx_counts;
    GateCounts ms_counts;
};

/// Restart 0 uses the warm start when init is kWarm; every other restart
/// draws parameters from Uniform(-pi, pi) with a seed derived from
/// (cfg.seed, restart). The cost is the exact expectation <H_p>.
OptimizationResult run_hdcqo(const IsingModel &m, const AnsatzSpec &spec, const VariationalOptions &options);

/// QAOA restarts all draw from Uniform(-pi, pi).
OptimizationResult run_qaoa(const IsingModel &m, int p, const OptimizerConfig &cfg);

/// Simulates c exactly and fills distribution, metrics and gate counts.
void evaluate_final_circuit(const IsingModel &m, const std::vector<double> &energies, const Circuit &c,
                            OptimizationResult &out);

}  // namespace dcqo

#endif
