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


#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcqo/experiment.h"
#include "json.hpp"

using namespace dcqo;

namespace {

struct ProblemFlags {
    std::string tsp;
    std::string qubo;
    std::size_t spin_glass = 0;
    std::size_t dense = 0;
    std::uint64_t seed = 0;
};

void add_problem_options(CLI::App *cmd, ProblemFlags &f, bool with_seed = true) {
    auto *g = cmd->add_option_group("problem", "exactly one problem source");
    g->add_option("--tsp", f.tsp, "TSP instance (JSON with distances or coordinates)");
    g->add_option("--qubo", f.qubo, "QUBO text file");
    g->add_option("--random-spin-glass", f.spin_glass, "seeded Uniform(-1,1) spin glass with this many spins");
    g->add_option("--dense-qubo", f.dense, "seeded fully connected QUBO with this many variables");
    g->require_option(1);
    if (with_seed) {
        cmd->add_option("--seed", f.seed, "instance, sampling and optimizer seed")->capture_default_str();
    }
}

ProblemConfig problem_config(const ProblemFlags &f) {
    ProblemConfig p;
    p.seed = f.seed;
    if (!f.tsp.empty()) {
        p.source = ProblemSource::kTspFile;
        p.path = f.tsp;
    } else if (!f.qubo.empty()) {
        p.source = ProblemSource::kQuboFile;
        p.path = f.qubo;
    } else if (f.spin_glass > 0) {
        p.source = ProblemSource::kRandomSpinGlass;
        p.size = f.spin_glass;
    } else if (f.dense > 0) {
        p.source = ProblemSource::kDenseQubo;
        p.size = f.dense;
    } else {
        throw ConfigError("no problem source given");
    }
    return p;
}

struct SolveFlags {
    std::string algorithm = "dcqo";
    std::string variant = "two-param";
    std::string normalization = "variational";
    std::string method = "nelder-mead";
};

void add_solve_options(CLI::App *cmd, ExperimentConfig &c, SolveFlags &f) {
    cmd->add_option("--time", c.T, "evolution time T")->capture_default_str();
    cmd->add_option("--steps", c.steps, "Trotter steps N (dqa, dcqo, dcqo-full)")->capture_default_str();
    cmd->add_option("--layers", c.layers, "layers p (qaoa, hdcqo)")->capture_default_str();
    cmd->add_option("--variant", f.variant, "hdcqo ansatz: two-param, per-one-body, y-zy-only")
        ->capture_default_str();
    cmd->add_flag("--warm", c.warm, "warm-start hdcqo restart 0 from the counterdiabatic schedule");
    cmd->add_option("--warm-steps", c.warm_steps, "schedule length behind the warm start (0: layers + 1)")
        ->capture_default_str();
    cmd->add_option("--normalization", f.normalization, "CD coefficient: variational or as-printed")
        ->capture_default_str();
    cmd->add_option("--cutoff", c.gate_cutoff, "drop rotations with |angle| below this")->capture_default_str();
    cmd->add_option("--step-cutoff", c.step_cutoff, "drop dcqo steps whose CD strength is below this")
        ->capture_default_str();
    cmd->add_option("--shots", c.shots, "measurement shots (0: exact probabilities)")->capture_default_str();
    cmd->add_option("--optimizer", f.method, "nelder-mead or coordinate-descent")->capture_default_str();
    cmd->add_option("--restarts", c.optimizer.restarts, "optimizer restarts")->capture_default_str();
    cmd->add_option("--max-iterations", c.optimizer.max_iterations, "optimizer iterations per restart")
        ->capture_default_str();
    cmd->add_option("--tolerance", c.optimizer.tolerance, "optimizer stopping tolerance")->capture_default_str();
    cmd->add_option("--top-k", c.top_k, "rows in the outcome table")->capture_default_str();
}

void finish_solve_config(ExperimentConfig &c, const ProblemFlags &p, const SolveFlags &f) {
    c.problem = problem_config(p);
    c.seed = p.seed;
    try {
        c.algorithm = parse_algorithm(f.algorithm);
        c.variant = parse_ansatz_variant(f.variant);
        c.normalization = parse_cd_normalization(f.normalization);
        c.optimizer.method = parse_optimizer_method(f.method);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

void report_error(const std::string &kind, const std::string &message) {
    nlohmann::json j{{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Counterdiabatic and annealing circuits for QUBO problems."};
    app.require_subcommand(1);

    ProblemFlags solve_problem;
    ExperimentConfig solve_cfg;
    SolveFlags solve_flags;
    CLI::App *solve = app.add_subcommand("solve", "build, simulate and score one circuit");
    add_problem_options(solve, solve_problem);
    solve->add_option("--alg", solve_flags.algorithm, "dqa, dcqo, dcqo-full, qaoa or hdcqo")->capture_default_str();
    add_solve_options(solve, solve_cfg, solve_flags);
    solve->add_option("-o,--output", solve_cfg.output, "result JSON path (default: print to stdout)");
    solve->add_option("--circuit-out", solve_cfg.circuit_output, "write the final circuit and its metadata");

    ProblemFlags scan_problem;
    RegimeScanConfig scan_cfg;
    std::vector<std::string> scan_variants{"anneal", "full", "cd-only"};
    std::string scan_norm = "variational";
    CLI::App *scan = app.add_subcommand("regime-scan", "success probability against evolution time");
    add_problem_options(scan, scan_problem);
    scan->add_option("--steps", scan_cfg.steps, "Trotter steps N")->capture_default_str();
    scan->add_option("--t-min", scan_cfg.t_min, "smallest T")->capture_default_str();
    scan->add_option("--t-max", scan_cfg.t_max, "largest T")->capture_default_str();
    scan->add_option("--points", scan_cfg.points, "log-spaced grid points")->capture_default_str();
    scan->add_option("--variants", scan_variants, "anneal, full, cd-only")->capture_default_str()->delimiter(',');
    scan->add_option("--normalization", scan_norm, "CD coefficient: variational or as-printed")
        ->capture_default_str();
    scan->add_flag("--continuum", scan_cfg.continuum, "continuous-time evolution instead of Trotter circuits");
    scan->add_option("--grid", scan_cfg.grid, "time slices for --continuum")->capture_default_str();
    scan->add_option("-o,--output", scan_cfg.output, "CSV path (default: print to stdout)");

    ProblemFlags cmp_problem;
    CompareConfig cmp_cfg;
    SolveFlags cmp_flags;
    std::vector<std::string> cmp_algs;
    CLI::App *cmp = app.add_subcommand("compare", "several algorithms over seeded instances");
    add_problem_options(cmp, cmp_problem, false);
    cmp->add_option("--algs", cmp_algs, "comma-separated algorithms")->delimiter(',');
    cmp->add_option("--seeds", cmp_cfg.seeds, "comma-separated instance seeds")->delimiter(',');
    add_solve_options(cmp, cmp_cfg.base, cmp_flags);
    cmp->add_option("--output-csv", cmp_cfg.output_csv, "CSV path");
    cmp->add_option("--output-json", cmp_cfg.output_json, "JSON path");

    ProblemFlags lns_problem;
    LnsConfig lns_cfg;
    std::string lns_sub = "brute-force", lns_strategy = "greedy-coupling";
    CLI::App *lns = app.add_subcommand("lns", "large neighborhood search over sub-QUBOs");
    add_problem_options(lns, lns_problem);
    lns->add_option("--k", lns_cfg.k, "sub-QUBO size")->capture_default_str();
    lns->add_option("--budget", lns_cfg.budget, "subproblem solves")->capture_default_str();
    lns->add_option("--subsolver", lns_sub, "brute-force or dcqo")->capture_default_str();
    lns->add_option("--strategy", lns_strategy, "greedy-coupling or sequential")->capture_default_str();
    lns->add_option("--dcqo-steps", lns_cfg.dcqo_steps, "Trotter steps of the dcqo subsolver")
        ->capture_default_str();
    lns->add_option("-o,--output", lns_cfg.output, "result JSON path (default: print to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        report_error("usage", e.what());
        return 2;
    }

    try {
        if (solve->parsed()) {
            finish_solve_config(solve_cfg, solve_problem, solve_flags);
            RunResult r = cmd_solve(solve_cfg);
            std::cout << (solve_cfg.output.empty() ? format_run_result_json(r) : format_run_summary_json(r));
        } else if (scan->parsed()) {
            scan_cfg.problem = problem_config(scan_problem);
            scan_cfg.variants.clear();
            try {
                for (const std::string &v : scan_variants) {
                    scan_cfg.variants.push_back(parse_evolution_variant(v));
                }
                scan_cfg.normalization = parse_cd_normalization(scan_norm);
            } catch (const std::invalid_argument &e) {
                throw ConfigError(e.what());
            }
            std::cout << format_regime_csv(cmd_regime_scan(scan_cfg));
        } else if (cmp->parsed()) {
            finish_solve_config(cmp_cfg.base, cmp_problem, cmp_flags);
            for (const std::string &a : cmp_algs) {
                cmp_cfg.algorithms.push_back(parse_algorithm(a));
            }
            std::cout << format_compare_csv(cmd_compare(cmp_cfg));
        } else if (lns->parsed()) {
            lns_cfg.problem = problem_config(lns_problem);
            lns_cfg.subsolver = parse_subsolver(lns_sub);
            lns_cfg.strategy = parse_strategy(lns_strategy);
            std::cout << format_lns_json(cmd_lns(lns_cfg));
        }
    } catch (const ConfigError &e) {
        report_error("usage", e.what());
        return 2;
    } catch (const std::exception &e) {
        report_error("domain", e.what());
        return 1;
    }
    return 0;
}
