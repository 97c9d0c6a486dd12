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


#ifndef DCQO_EXPERIMENT_H
#define DCQO_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcqo/circuit.h"
#include "dcqo/ising.h"
#include "dcqo/optimizer.h"
#include "dcqo/problems.h"
#include "dcqo/schedule.h"
#include "dcqo/simulator.h"

namespace dcqo {

/// Invalid experiment settings. The command-line front end maps it to a usage
/// error rather than a domain error.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// ----------------------------------------------------------------- problems

enum class ProblemSource { kTspFile, kQuboFile, kRandomSpinGlass, kDenseQubo };
std::string to_string(ProblemSource s);

struct ProblemConfig {
    ProblemSource source = ProblemSource::kRandomSpinGlass;
    /// Input file for kTspFile and kQuboFile.
    std::string path;
    /// Variable count for the generated sources.
    std::size_t size = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct LoadedProblem {
    std::string description;
    /// Absent for spin glasses, which are generated directly as Ising models.
    std::optional<QuboProblem> qubo;
    std::optional<TspInstance> tsp;
    IsingModel model;
};

LoadedProblem load_problem(const ProblemConfig &p);

// -------------------------------------------------------------------- solve

enum class Algorithm { kDqa, kDcqo, kDcqoFull, kQaoa, kHdcqo };
std::string to_string(Algorithm a);
/// "dqa", "dcqo", "dcqo-full", "qaoa", "hdcqo".
Algorithm parse_algorithm(const std::string &name);
bool is_variational(Algorithm a);

struct ExperimentConfig {
    ProblemConfig problem;
    Algorithm algorithm = Algorithm::kDcqo;
    double T = 1.0;
    /// Trotter steps N (dqa, dcqo, dcqo-full).
    int steps = 2;
    /// Layers p (qaoa, hdcqo).
    int layers = 1;
    AnsatzVariant variant = AnsatzVariant::kTwoParam;
    bool warm = false;
    /// Schedule length behind the warm start; 0 means layers + 1.
    int warm_steps = 0;
    CdNormalization normalization = CdNormalization::kVariational;
    double gate_cutoff = 0.0;
    /// dcqo and dcqo-full only.
    double step_cutoff = 0.0;
    /// 0 = exact probabilities.
    std::uint64_t shots = 0;
    /// Seeds sampling and optimizer restarts.
    std::uint64_t seed = 0;
    OptimizerConfig optimizer;
    std::size_t top_k = 20;
    std::string output;
    std::string circuit_output;

    void validate() const;
};

struct RunResult {
    ExperimentConfig config;
    LoadedProblem problem;
    /// Final circuit after cutoffs.
    Circuit circuit;
    GateCounts abstract_counts;
    GateCounts cx_counts;
    GateCounts ms_counts;
    /// Counts of the same circuit before any cutoff.
    GateCounts uncut_cx_counts;
    GateCounts uncut_ms_counts;
    OutcomeDistribution distribution;
    /// Present when the width allows brute force.
    std::optional<GroundStateSet> ground;
    std::optional<double> success_probability;
    std::optional<double> approximation_ratio;
    double mean_energy = 0.0;
    std::optional<TspDecoding> most_probable_tour;
    std::vector<double> params;
    std::vector<double> trace;
    std::vector<double> restart_costs;
    int evaluations = 0;
    double wall_seconds = 0.0;
};

/// Builds, compresses, simulates and scores one circuit. Writes the JSON
/// result (and circuit files) when the config names an output path.
RunResult cmd_solve(const ExperimentConfig &cfg);

/// Config echo, model, counts, metrics, full distribution, top-K table,
/// optimizer trace and wall time.
std::string format_run_result_json(const RunResult &r);
/// Short form without the distribution and model.
std::string format_run_summary_json(const RunResult &r);

// -------------------------------------------------------------- regime scan

struct RegimeScanConfig {
    ProblemConfig problem;
    int steps = 20;
    double t_min = 0.005;
    double t_max = 10.0;
    int points = 9;
    std::vector<EvolutionVariant> variants{EvolutionVariant::kAnneal, EvolutionVariant::kFull,
                                           EvolutionVariant::kCdOnly};
    CdNormalization normalization = CdNormalization::kVariational;
    /// Use the continuous-time oracle instead of Trotter circuits.
    bool continuum = false;
    int grid = 2000;
    std::string output;

    void validate() const;
};

struct RegimeRow {
    double T = 0.0;
    EvolutionVariant variant = EvolutionVariant::kAnneal;
    double success_probability = 0.0;
};

/// Log-spaced T grid from t_min to t_max; rows ordered by T, then variant.
std::vector<double> regime_grid(const RegimeScanConfig &cfg);
std::vector<RegimeRow> cmd_regime_scan(const RegimeScanConfig &cfg);
/// Header `T,variant,sp`.
std::string format_regime_csv(const std::vector<RegimeRow> &rows);

// ------------------------------------------------------------------ compare

struct CompareConfig {
    /// Shared settings; problem.seed and seed are replaced per instance.
    ExperimentConfig base;
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> seeds;
    std::string output_csv;
    std::string output_json;

    void validate() const;
};

struct CompareRow {
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::kDqa;
    std::size_t cx_two_qubit = 0;
    std::size_t ms_two_qubit = 0;
    std::optional<double> success_probability;
    std::optional<double> approximation_ratio;
    double mean_energy = 0.0;
};

/// One row per (seed, algorithm), in seed-major order.
std::vector<CompareRow> cmd_compare(const CompareConfig &cfg);
std::string format_compare_csv(const std::vector<CompareRow> &rows);
std::string format_compare_json(const CompareConfig &cfg, const std::vector<CompareRow> &rows);

// ---------------------------------------------------------------------- LNS

enum class SubsolverKind { kBruteForce, kDcqo };
std::string to_string(SubsolverKind s);
SubsolverKind parse_subsolver(const std::string &name);
DecompositionStrategy parse_strategy(const std::string &name);

struct LnsConfig {
    ProblemConfig problem;
    std::size_t k = 16;
    int budget = 100;
    SubsolverKind subsolver = SubsolverKind::kBruteForce;
    DecompositionStrategy strategy = DecompositionStrategy::kGreedyCoupling;
    int dcqo_steps = 2;
    std::string output;

    void validate() const;
};

struct LnsRunResult {
    LnsConfig config;
    LnsResult lns;
    /// Brute-force optimum for small problems.
    std::optional<double> optimum;
    double wall_seconds = 0.0;
};

LnsRunResult cmd_lns(const LnsConfig &cfg);
std::string format_lns_json(const LnsRunResult &r);

}  // namespace dcqo

#endif
