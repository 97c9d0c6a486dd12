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


#include "dcqo/experiment.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "dcqo/files.h"
#include "dcqo/parallel.h"
#include "dcqo/variational.h"
#include "json.hpp"

namespace dcqo {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

bool positive(double v) {
    return std::isfinite(v) && v > 0.0;
}

bool nonnegative(double v) {
    return std::isfinite(v) && v >= 0.0;
}

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json optional_number(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

json problem_config_json(const ProblemConfig &p) {
    json j{{"source", to_string(p.source)}, {"seed", p.seed}};
    if (p.source == ProblemSource::kTspFile || p.source == ProblemSource::kQuboFile) {
        j["path"] = p.path;
    } else {
        j["size"] = p.size;
    }
    return j;
}

json optimizer_json(const OptimizerConfig &o) {
    return {{"method", to_string(o.method)},
            {"max_iterations", o.max_iterations},
            {"tolerance", o.tolerance},
            {"restarts", o.restarts},
            {"initial_step", o.initial_step}};
}

json config_json(const ExperimentConfig &c) {
    json j{{"problem", problem_config_json(c.problem)},
           {"algorithm", to_string(c.algorithm)},
           {"T", c.T},
           {"normalization", to_string(c.normalization)},
           {"gate_cutoff", c.gate_cutoff},
           {"shots", c.shots},
           {"seed", c.seed},
           {"top_k", c.top_k}};
    if (is_variational(c.algorithm)) {
        j["layers"] = c.layers;
        j["optimizer"] = optimizer_json(c.optimizer);
    } else {
        j["steps"] = c.steps;
    }
    if (c.algorithm == Algorithm::kHdcqo) {
        j["variant"] = to_string(c.variant);
        j["warm"] = c.warm;
        j["warm_steps"] = c.warm_steps == 0 ? c.layers + 1 : c.warm_steps;
    }
    if (c.algorithm == Algorithm::kDcqo || c.algorithm == Algorithm::kDcqoFull) {
        j["step_cutoff"] = c.step_cutoff;
    }
    return j;
}

json model_json(const IsingModel &m) {
    json couplings = json::array();
    for (const Coupling &c : m.couplings) {
        couplings.push_back({c.i, c.j, c.value});
    }
    return {{"n", m.n}, {"h", m.h}, {"couplings", couplings}, {"offset", m.offset}};
}

json counts_json(const GateCounts &g) {
    json kinds = json::object();
    for (std::size_t k = 0; k < kNumGateKinds; k++) {
        if (g.by_kind[k] > 0) {
            kinds[gate_name(static_cast<GateKind>(k))] = g.by_kind[k];
        }
    }
    return {{"two_qubit", g.two_qubit}, {"total", g.total}, {"by_kind", kinds}};
}

json tour_json(const TspDecoding &d) {
    if (!d.feasible()) {
        return {{"feasible", false}, {"violation", d.violation}};
    }
    return {{"feasible", true}, {"cities", d.path->cities}, {"length", d.path->length}};
}

json metrics_json(const RunResult &r) {
    json j{{"success_probability", optional_number(r.success_probability)},
           {"approximation_ratio", optional_number(r.approximation_ratio)},
           {"mean_energy", r.mean_energy}};
    if (r.ground) {
        json bits = json::array();
        for (Bitstring x : r.ground->bitstrings) {
            bits.push_back(format_bits(x, r.ground->n));
        }
        j["ground_energy"] = r.ground->energy;
        j["ground_states"] = bits;
    }
    return j;
}

json top_json(const RunResult &r) {
    const IsingModel &m = r.problem.model;
    json rows = json::array();
    for (const Outcome &o : r.distribution.top(r.config.top_k)) {
        json row{{"bits", format_bits(o.bits, m.n)},
                 {"probability", o.probability},
                 {"energy", ising_energy(m, o.bits)}};
        if (r.ground) {
            row["ground"] = r.ground->contains(o.bits);
        }
        if (r.problem.tsp) {
            row["tour"] = tour_json(decode_tsp(o.bits, *r.problem.tsp));
        }
        rows.push_back(row);
    }
    return rows;
}

json summary_json(const RunResult &r) {
    json j{{"config", config_json(r.config)},
           {"problem", {{"description", r.problem.description}, {"n", r.problem.model.n}}},
           {"gate_counts",
            {{"abstract", counts_json(r.abstract_counts)},
             {"cx", counts_json(r.cx_counts)},
             {"ms", counts_json(r.ms_counts)},
             {"cx_before_cutoff", counts_json(r.uncut_cx_counts)},
             {"ms_before_cutoff", counts_json(r.uncut_ms_counts)}}},
           {"circuit_metadata", json::parse(circuit_metadata_json(r.circuit))},
           {"metrics", metrics_json(r)},
           {"top", top_json(r)},
           {"wall_seconds", r.wall_seconds}};
    if (r.most_probable_tour) {
        j["most_probable_tour"] = tour_json(*r.most_probable_tour);
    }
    if (is_variational(r.config.algorithm)) {
        j["optimizer"] = {{"params", r.params},
                          {"trace", r.trace},
                          {"restart_costs", r.restart_costs},
                          {"evaluations", r.evaluations}};
    }
    return j;
}

Circuit dcqo_circuit(const IsingModel &m, int N, DcqoVariant v, double T, CdNormalization norm) {
    DcqoOptions o;
    o.variant = v;
    o.T = T;
    o.normalization = norm;
    return build_dcqo_circuit(m, N, o);
}

}  // namespace

// ----------------------------------------------------------------- problems

std::string to_string(ProblemSource s) {
    switch (s) {
        case ProblemSource::kTspFile:
            return "tsp-file";
        case ProblemSource::kQuboFile:
            return "qubo-file";
        case ProblemSource::kRandomSpinGlass:
            return "random-spin-glass";
        case ProblemSource::kDenseQubo:
            return "dense-qubo";
    }
    return "?";
}

void ProblemConfig::validate() const {
    if (source == ProblemSource::kTspFile || source == ProblemSource::kQuboFile) {
        require(!path.empty(), to_string(source) + " needs a path");
    } else {
        require(size >= 1, to_string(source) + " needs a size of at least 1");
    }
}

LoadedProblem load_problem(const ProblemConfig &p) {
    p.validate();
    LoadedProblem out;
    switch (p.source) {
        case ProblemSource::kTspFile:
            out.tsp = load_tsp_json(p.path);
            out.qubo = tsp_to_qubo(*out.tsp);
            out.description = "tsp " + p.path;
            break;
        case ProblemSource::kQuboFile:
            out.qubo = load_qubo_file(p.path);
            out.description = "qubo " + p.path;
            break;
        case ProblemSource::kRandomSpinGlass:
            out.model = random_spin_glass(p.size, p.seed);
            out.description = "random spin glass n=" + std::to_string(p.size) + " seed=" + std::to_string(p.seed);
            return out;
        case ProblemSource::kDenseQubo:
            out.qubo = dense_qubo_instance(p.size, p.seed);
            out.description = "dense qubo n=" + std::to_string(p.size) + " seed=" + std::to_string(p.seed);
            break;
    }
    out.model = qubo_to_ising(*out.qubo);
    return out;
}

// -------------------------------------------------------------------- solve

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kDqa:
            return "dqa";
        case Algorithm::kDcqo:
            return "dcqo";
        case Algorithm::kDcqoFull:
            return "dcqo-full";
        case Algorithm::kQaoa:
            return "qaoa";
        case Algorithm::kHdcqo:
            return "hdcqo";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string &name) {
    for (Algorithm a : {Algorithm::kDqa, Algorithm::kDcqo, Algorithm::kDcqoFull, Algorithm::kQaoa, Algorithm::kHdcqo}) {
        if (to_string(a) == name) {
            return a;
        }
    }
    throw ConfigError("unknown algorithm '" + name + "'");
}

bool is_variational(Algorithm a) {
    return a == Algorithm::kQaoa || a == Algorithm::kHdcqo;
}

void ExperimentConfig::validate() const {
    problem.validate();
    require(positive(T), "T must be positive and finite");
    require(steps >= 1, "steps must be at least 1");
    require(layers >= 0, "layers must be nonnegative");
    require(warm_steps >= 0, "warm steps must be nonnegative");
    require(!warm || warm_steps == 0 || warm_steps >= layers, "warm steps must be at least the layer count");
    require(nonnegative(gate_cutoff), "gate cutoff must be nonnegative");
    require(nonnegative(step_cutoff), "step cutoff must be nonnegative");
    require(top_k >= 1, "top-k must be at least 1");
    try {
        optimizer.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

RunResult cmd_solve(const ExperimentConfig &cfg) {
    cfg.validate();
    Clock::time_point t0 = Clock::now();
    RunResult r;
    r.config = cfg;
    r.problem = load_problem(cfg.problem);
    const IsingModel &m = r.problem.model;
    if (m.n > kMaxStateWidth) {
        throw std::invalid_argument("problem has " + std::to_string(m.n) + " variables; simulation supports at most " +
                                    std::to_string(kMaxStateWidth));
    }

    OptimizerConfig opt = cfg.optimizer;
    opt.seed = cfg.seed;
    Circuit uncut(m.n);
    std::optional<OptimizationResult> trained;
    switch (cfg.algorithm) {
        case Algorithm::kDqa:
            uncut = build_dqa_circuit(m, cfg.T, cfg.steps);
            break;
        case Algorithm::kDcqo:
            uncut = dcqo_circuit(m, cfg.steps, DcqoVariant::kCdOnly, cfg.T, cfg.normalization);
            break;
        case Algorithm::kDcqoFull:
            uncut = dcqo_circuit(m, cfg.steps, DcqoVariant::kFull, cfg.T, cfg.normalization);
            break;
        case Algorithm::kQaoa:
            trained = run_qaoa(m, cfg.layers, opt);
            break;
        case Algorithm::kHdcqo: {
            VariationalOptions vo;
            vo.optimizer = opt;
            vo.init = cfg.warm ? InitKind::kWarm : InitKind::kRandom;
            vo.warm_steps = cfg.warm_steps;
            vo.normalization = cfg.normalization;
            trained = run_hdcqo(m, AnsatzSpec::make(cfg.variant, cfg.layers), vo);
            break;
        }
    }
    if (trained) {
        uncut = trained->circuit;
        r.params = trained->best_params;
        r.trace = trained->trace;
        r.restart_costs = trained->restart_costs;
        r.evaluations = trained->evaluations;
    }

    Circuit c = uncut;
    if (cfg.step_cutoff > 0.0 && (cfg.algorithm == Algorithm::kDcqo || cfg.algorithm == Algorithm::kDcqoFull)) {
        c = apply_step_cutoff(c, cfg.step_cutoff);
    }
    if (cfg.gate_cutoff > 0.0) {
        c = apply_gate_cutoff(c, cfg.gate_cutoff);
    }
    r.circuit = c;
    r.abstract_counts = count_gates(c);
    r.cx_counts = count_gates(lower_to_cx(c));
    r.ms_counts = count_gates(lower_to_ms(c));
    r.uncut_cx_counts = count_gates(lower_to_cx(uncut));
    r.uncut_ms_counts = count_gates(lower_to_ms(uncut));

    StateVector s(m.n);
    run_in_place(c, s);
    r.distribution = cfg.shots > 0 ? sample(s, cfg.shots, derive_seed(cfg.seed, 1)) : probabilities(s);
    r.mean_energy = mean_energy(r.distribution, m);
    if (m.n <= kMaxBruteForceWidth) {
        r.ground = ground_states_from_energies(m.n, diagonal_energies(m));
        r.success_probability = success_probability(r.distribution, *r.ground);
        try {
            r.approximation_ratio = approximation_ratio(r.distribution, m, *r.ground);
        } catch (const UndefinedMetricError &) {
            r.approximation_ratio.reset();
        }
    }
    if (r.problem.tsp) {
        r.most_probable_tour = decode_tsp(r.distribution.most_probable(), *r.problem.tsp);
    }
    r.wall_seconds = seconds_since(t0);

    if (!cfg.output.empty()) {
        write_file_atomically(cfg.output, format_run_result_json(r));
    }
    if (!cfg.circuit_output.empty()) {
        write_circuit_files(c, cfg.circuit_output);
    }
    return r;
}

std::string format_run_result_json(const RunResult &r) {
    json j = summary_json(r);
    j["model"] = model_json(r.problem.model);
    if (r.problem.tsp) {
        const TspInstance &t = *r.problem.tsp;
        j["tsp"] = {{"n", t.n}, {"distances", t.d}, {"penalty", t.penalty}, {"cities", t.cities}};
    }
    json entries = json::array();
    for (const Outcome &o : r.distribution.entries()) {
        entries.push_back({format_bits(o.bits, r.distribution.width()), o.probability});
    }
    j["distribution"] = {{"shots", r.distribution.shots()}, {"entries", entries}};
    return j.dump(1) + "\n";
}

std::string format_run_summary_json(const RunResult &r) {
    return summary_json(r).dump(2) + "\n";
}

// -------------------------------------------------------------- regime scan

void RegimeScanConfig::validate() const {
    problem.validate();
    require(steps >= 1, "steps must be at least 1");
    require(positive(t_min) && positive(t_max) && t_min <= t_max, "need 0 < t-min <= t-max");
    require(points >= 1, "points must be at least 1");
    require(!variants.empty(), "variant list is empty");
    require(std::set<EvolutionVariant>(variants.begin(), variants.end()).size() == variants.size(),
            "variant list has duplicates");
    require(grid >= 1, "grid must be at least 1");
}

std::vector<double> regime_grid(const RegimeScanConfig &cfg) {
    std::vector<double> ts;
    if (cfg.points == 1) {
        ts.push_back(cfg.t_min);
        return ts;
    }
    double ratio = cfg.t_max / cfg.t_min;
    for (int k = 0; k < cfg.points; k++) {
        ts.push_back(k == cfg.points - 1 ? cfg.t_max
                                         : cfg.t_min * std::pow(ratio, static_cast<double>(k) / (cfg.points - 1)));
    }
    return ts;
}

std::vector<RegimeRow> cmd_regime_scan(const RegimeScanConfig &cfg) {
    cfg.validate();
    LoadedProblem p = load_problem(cfg.problem);
    const IsingModel &m = p.model;
    if (m.n > kMaxBruteForceWidth) {
        throw std::invalid_argument("regime scan needs brute-force ground states (at most " +
                                    std::to_string(kMaxBruteForceWidth) + " variables)");
    }
    if (cfg.continuum && m.n > kMaxExactWidth) {
        throw std::invalid_argument("continuous evolution supports at most " + std::to_string(kMaxExactWidth) +
                                    " variables");
    }
    GroundStateSet ground = ground_states_from_energies(m.n, diagonal_energies(m));
    std::vector<double> ts = regime_grid(cfg);
    std::vector<RegimeRow> rows(ts.size() * cfg.variants.size());
    for (std::size_t a = 0; a < ts.size(); a++) {
        for (std::size_t b = 0; b < cfg.variants.size(); b++) {
            rows[a * cfg.variants.size() + b] = {ts[a], cfg.variants[b], 0.0};
        }
    }
    parallel_for(rows.size(), worker_count(), [&](std::size_t i) {
        RegimeRow &row = rows[i];
        StateVector s(m.n);
        if (cfg.continuum) {
            s = exact_evolve(m, row.variant, row.T, cfg.grid, cfg.normalization);
        } else {
            Circuit c(m.n);
            switch (row.variant) {
                case EvolutionVariant::kAnneal:
                    c = build_dqa_circuit(m, row.T, cfg.steps);
                    break;
                case EvolutionVariant::kFull:
                    c = dcqo_circuit(m, cfg.steps, DcqoVariant::kFull, row.T, cfg.normalization);
                    break;
                case EvolutionVariant::kCdOnly:
                    c = dcqo_circuit(m, cfg.steps, DcqoVariant::kCdOnly, row.T, cfg.normalization);
                    break;
            }
            run_in_place(c, s);
        }
        row.success_probability = success_probability(probabilities(s), ground);
    });
    if (!cfg.output.empty()) {
        write_file_atomically(cfg.output, format_regime_csv(rows));
    }
    return rows;
}

std::string format_regime_csv(const std::vector<RegimeRow> &rows) {
    std::string out = "T,variant,sp\n";
    for (const RegimeRow &r : rows) {
        out += number(r.T) + "," + to_string(r.variant) + "," + number(r.success_probability) + "\n";
    }
    return out;
}

// ------------------------------------------------------------------ compare

void CompareConfig::validate() const {
    base.validate();
    require(!algorithms.empty(), "algorithm list is empty");
    require(std::set<Algorithm>(algorithms.begin(), algorithms.end()).size() == algorithms.size(),
            "algorithm list has duplicates");
    require(!seeds.empty(), "seed list is empty");
}

std::vector<CompareRow> cmd_compare(const CompareConfig &cfg) {
    cfg.validate();
    std::size_t na = cfg.algorithms.size();
    std::vector<CompareRow> rows(cfg.seeds.size() * na);
    parallel_for(rows.size(), worker_count(), [&](std::size_t i) {
        ExperimentConfig c = cfg.base;
        c.algorithm = cfg.algorithms[i % na];
        c.problem.seed = cfg.seeds[i / na];
        c.seed = cfg.seeds[i / na];
        c.output.clear();
        c.circuit_output.clear();
        RunResult r = cmd_solve(c);
        CompareRow &row = rows[i];
        row.seed = c.seed;
        row.algorithm = c.algorithm;
        row.cx_two_qubit = r.cx_counts.two_qubit;
        row.ms_two_qubit = r.ms_counts.two_qubit;
        row.success_probability = r.success_probability;
        row.approximation_ratio = r.approximation_ratio;
        row.mean_energy = r.mean_energy;
    });
    if (!cfg.output_csv.empty()) {
        write_file_atomically(cfg.output_csv, format_compare_csv(rows));
    }
    if (!cfg.output_json.empty()) {
        write_file_atomically(cfg.output_json, format_compare_json(cfg, rows));
    }
    return rows;
}

std::string format_compare_csv(const std::vector<CompareRow> &rows) {
    std::string out = "seed,algorithm,cx_two_qubit,ms_two_qubit,sp,ar,mean_energy\n";
    for (const CompareRow &r : rows) {
        out += std::to_string(r.seed) + "," + to_string(r.algorithm) + "," + std::to_string(r.cx_two_qubit) + "," +
               std::to_string(r.ms_two_qubit) + "," +
               (r.success_probability ? number(*r.success_probability) : std::string()) + "," +
               (r.approximation_ratio ? number(*r.approximation_ratio) : std::string()) + "," +
               number(r.mean_energy) + "\n";
    }
    return out;
}

std::string format_compare_json(const CompareConfig &cfg, const std::vector<CompareRow> &rows) {
    json algs = json::array();
    for (Algorithm a : cfg.algorithms) {
        algs.push_back(to_string(a));
    }
    json base = config_json(cfg.base);
    base.erase("algorithm");
    base.erase("seed");
    base["problem"].erase("seed");
    json out_rows = json::array();
    for (const CompareRow &r : rows) {
        out_rows.push_back({{"seed", r.seed},
                            {"algorithm", to_string(r.algorithm)},
                            {"cx_two_qubit", r.cx_two_qubit},
                            {"ms_two_qubit", r.ms_two_qubit},
                            {"success_probability", optional_number(r.success_probability)},
                            {"approximation_ratio", optional_number(r.approximation_ratio)},
                            {"mean_energy", r.mean_energy}});
    }
    json j{{"config", base}, {"algorithms", algs}, {"seeds", cfg.seeds}, {"rows", out_rows}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------- LNS

std::string to_string(SubsolverKind s) {
    return s == SubsolverKind::kBruteForce ? "brute-force" : "dcqo";
}

SubsolverKind parse_subsolver(const std::string &name) {
    for (SubsolverKind s : {SubsolverKind::kBruteForce, SubsolverKind::kDcqo}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw ConfigError("unknown subsolver '" + name + "'");
}

DecompositionStrategy parse_strategy(const std::string &name) {
    for (DecompositionStrategy s : {DecompositionStrategy::kGreedyCoupling, DecompositionStrategy::kSequential}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw ConfigError("unknown decomposition strategy '" + name + "'");
}

void LnsConfig::validate() const {
    problem.validate();
    require(problem.source != ProblemSource::kRandomSpinGlass, "lns needs a QUBO source");
    require(k >= 1, "k must be at least 1");
    require(budget >= 0, "budget must be nonnegative");
    require(dcqo_steps >= 1, "dcqo steps must be at least 1");
    std::size_t limit = subsolver == SubsolverKind::kBruteForce ? kMaxBruteForceWidth : kMaxStateWidth;
    require(k <= limit, "k exceeds the " + to_string(subsolver) + " subsolver limit of " + std::to_string(limit));
}

LnsRunResult cmd_lns(const LnsConfig &cfg) {
    cfg.validate();
    Clock::time_point t0 = Clock::now();
    LoadedProblem p = load_problem(cfg.problem);
    const QuboProblem &q = *p.qubo;
    SubSolver solver = cfg.subsolver == SubsolverKind::kBruteForce ? brute_force_subsolver()
                                                                    : dcqo_subsolver(cfg.dcqo_steps);
    LnsRunResult r;
    r.config = cfg;
    r.lns = lns_solve(q, std::min(cfg.k, q.n), solver, cfg.budget, cfg.strategy);
    if (q.n <= kMaxSpectrumWidth) {
        r.optimum = brute_force_solve(qubo_to_ising(q)).energy;
    }
    r.wall_seconds = seconds_since(t0);
    if (!cfg.output.empty()) {
        write_file_atomically(cfg.output, format_lns_json(r));
    }
    return r;
}

std::string format_lns_json(const LnsRunResult &r) {
    std::string bits;
    for (std::uint8_t v : r.lns.assignment) {
        bits += v ? '1' : '0';
    }
    json j{{"config",
            {{"problem", problem_config_json(r.config.problem)},
             {"k", r.config.k},
             {"budget", r.config.budget},
             {"subsolver", to_string(r.config.subsolver)},
             {"strategy", to_string(r.config.strategy)}}},
           {"assignment", bits},
           {"cost", r.lns.cost},
           {"trace", r.lns.trace},
           {"subproblems_solved", r.lns.subproblems_solved},
           {"sweeps", r.lns.sweeps},
           {"optimum", optional_number(r.optimum)},
           {"wall_seconds", r.wall_seconds}};
    if (r.config.subsolver == SubsolverKind::kDcqo) {
        j["config"]["dcqo_steps"] = r.config.dcqo_steps;
    }
    return j.dump(2) + "\n";
}

}  // namespace dcqo
