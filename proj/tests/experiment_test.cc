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


#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <gtest/gtest.h>
#include <set>
#include <stdexcept>

#include "dcqo/experiment.h"
#include "dcqo/files.h"
#include "dcqo/parallel.h"
#include "json.hpp"

using namespace dcqo;
using nlohmann::json;

namespace {

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("dcqo_test_" + name)).string();
}

std::string data_path(const std::string &name) {
    return std::string(DCQO_SOURCE_DIR) + "/data/" + name;
}

// Recomputes SP and AR from the stored model and distribution alone.
std::pair<double, double> recompute_metrics(const json &j) {
    const json &model = j["model"];
    std::size_t n = model["n"];
    std::vector<double> h = model["h"];
    double offset = model["offset"];
    std::vector<std::array<double, 3>> couplings;
    for (const json &c : model["couplings"]) {
        couplings.push_back({c[0].get<double>(), c[1].get<double>(), c[2].get<double>()});
    }
    auto energy = [&](const std::string &bits) {
        auto z = [&](std::size_t k) { return bits[k] == '0' ? 1.0 : -1.0; };
        double e = offset;
        for (std::size_t i = 0; i < n; i++) {
            e += h[i] * z(i);
        }
        for (const auto &c : couplings) {
            e += c[2] * z(static_cast<std::size_t>(c[0])) * z(static_cast<std::size_t>(c[1]));
        }
        return e;
    };
    double best = 1e300;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
        std::string bits(n, '0');
        for (std::size_t k = 0; k < n; k++) {
            bits[k] = ((x >> k) & 1) ? '1' : '0';
        }
        best = std::min(best, energy(bits));
    }
    double sp = 0.0, mean = 0.0;
    for (const json &e : j["distribution"]["entries"]) {
        std::string bits = e[0];
        double p = e[1];
        double en = energy(bits);
        mean += p * en;
        if (en <= best + 1e-9 * std::max(1.0, std::abs(best))) {
            sp += p;
        }
    }
    return {sp, mean / best};
}

ExperimentConfig spin_glass_config(std::size_t n, std::uint64_t seed) {
    ExperimentConfig c;
    c.problem.source = ProblemSource::kRandomSpinGlass;
    c.problem.size = n;
    c.problem.seed = seed;
    c.seed = seed;
    return c;
}

json without_wall_time(json j) {
    j.erase("wall_seconds");
    return j;
}

int run_cli(const std::string &args, const std::string &tag) {
    std::string out = temp_path(tag + ".out"), err = temp_path(tag + ".err");
    std::string cmd = std::string(DCQO_CLI_PATH) + " " + args + " > " + out + " 2> " + err;
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(cmd_solve, three_city_example) {
    ExperimentConfig c;
    c.problem.source = ProblemSource::kTspFile;
    c.problem.path = data_path("tsp3.json");
    c.algorithm = Algorithm::kDcqo;
    c.steps = 2;
    c.T = 0.2;
    c.gate_cutoff = 0.1;
    RunResult r = cmd_solve(c);
    EXPECT_EQ(r.cx_counts.two_qubit, 36u);
    EXPECT_EQ(r.ms_counts.two_qubit, 36u);
    EXPECT_EQ(r.uncut_ms_counts.two_qubit, 144u);
    ASSERT_TRUE(r.ground.has_value());
    EXPECT_EQ(r.ground->bitstrings.size(), 6u);
    ASSERT_TRUE(r.most_probable_tour.has_value());
    EXPECT_TRUE(r.most_probable_tour->feasible());
}

TEST(cmd_solve, metrics_recomputable_from_persisted_json) {
    std::string path = temp_path("solve.json");
    for (std::uint64_t shots : {std::uint64_t{0}, std::uint64_t{2000}}) {
        ExperimentConfig c = spin_glass_config(6, 7);
        c.algorithm = Algorithm::kDqa;
        c.T = 10;
        c.steps = 32;
        c.shots = shots;
        c.output = path;
        RunResult r = cmd_solve(c);
        json j = json::parse(read_file(path));
        auto [sp, ar] = recompute_metrics(j);
        EXPECT_NEAR(sp, j["metrics"]["success_probability"].get<double>(), 1e-12);
        EXPECT_NEAR(ar, j["metrics"]["approximation_ratio"].get<double>(), 1e-12);
        EXPECT_NEAR(sp, *r.success_probability, 1e-12);
        EXPECT_EQ(j["distribution"]["shots"].get<std::uint64_t>(), shots);
        EXPECT_EQ(j["top"].size(), std::min<std::size_t>(20, r.distribution.entries().size()));
    }
    std::filesystem::remove(path);
}

TEST(cmd_solve, deterministic) {
    for (Algorithm a : {Algorithm::kDqa, Algorithm::kQaoa, Algorithm::kHdcqo}) {
        ExperimentConfig c = spin_glass_config(5, 3);
        c.algorithm = a;
        c.shots = 500;
        c.optimizer.max_iterations = 40;
        c.optimizer.restarts = 2;
        json x = without_wall_time(json::parse(format_run_result_json(cmd_solve(c))));
        json y = without_wall_time(json::parse(format_run_result_json(cmd_solve(c))));
        EXPECT_EQ(x, y) << to_string(a);
    }
}

TEST(cmd_solve, dense_warm_hdcqo_gate_count) {
    ExperimentConfig c;
    c.problem.source = ProblemSource::kDenseQubo;
    c.problem.size = 16;
    c.problem.seed = 1;
    c.algorithm = Algorithm::kHdcqo;
    c.variant = AnsatzVariant::kTwoParam;
    c.layers = 1;
    c.warm = true;
    c.optimizer.max_iterations = 10;
    RunResult r = cmd_solve(c);
    EXPECT_EQ(r.cx_counts.two_qubit, 240u);
    EXPECT_EQ(r.params.size(), 2u);
    EXPECT_LE(r.trace.back(), r.trace.front());
}

TEST(cmd_solve, validation) {
    ExperimentConfig c = spin_glass_config(4, 0);
    c.T = 0;
    EXPECT_THROW(cmd_solve(c), ConfigError);
    c = spin_glass_config(4, 0);
    c.gate_cutoff = -1;
    EXPECT_THROW(cmd_solve(c), ConfigError);
    c = spin_glass_config(0, 0);
    EXPECT_THROW(cmd_solve(c), ConfigError);
    c = spin_glass_config(4, 0);
    c.optimizer.restarts = 0;
    EXPECT_THROW(cmd_solve(c), ConfigError);
    c = spin_glass_config(30, 0);
    EXPECT_THROW(cmd_solve(c), std::invalid_argument);
    EXPECT_THROW(parse_algorithm("annealing"), ConfigError);
}

TEST(cmd_regime_scan, shape) {
    RegimeScanConfig c;
    c.problem.source = ProblemSource::kRandomSpinGlass;
    c.problem.size = 10;
    c.problem.seed = 0;
    c.points = 5;
    std::vector<RegimeRow> rows = cmd_regime_scan(c);
    ASSERT_EQ(rows.size(), 15u);
    std::set<double> cd;
    for (const RegimeRow &r : rows) {
        if (r.variant == EvolutionVariant::kCdOnly) {
            cd.insert(r.success_probability);
        }
    }
    EXPECT_EQ(cd.size(), 1u);
    EXPECT_GE(rows[12].success_probability, rows[0].success_probability);
    EXPECT_EQ(rows.front().T, 0.005);
    EXPECT_EQ(rows.back().T, 10.0);
    std::string csv = format_regime_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "T,variant,sp");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 16);
}

TEST(cmd_regime_scan, single_point) {
    RegimeScanConfig c;
    c.problem.source = ProblemSource::kRandomSpinGlass;
    c.problem.size = 4;
    c.points = 1;
    c.variants = {EvolutionVariant::kCdOnly};
    EXPECT_EQ(cmd_regime_scan(c).size(), 1u);
    c.variants.clear();
    EXPECT_THROW(cmd_regime_scan(c), ConfigError);
    c.variants = {EvolutionVariant::kAnneal};
    c.t_min = 2;
    c.t_max = 1;
    EXPECT_THROW(cmd_regime_scan(c), ConfigError);
}

TEST(cmd_compare, dcqo_beats_dqa_at_matched_count) {
    CompareConfig c;
    c.base.problem.source = ProblemSource::kDenseQubo;
    c.base.problem.size = 16;
    c.base.steps = 6;
    c.base.T = 1.0;
    c.algorithms = {Algorithm::kDqa, Algorithm::kDcqo};
    for (std::uint64_t s = 0; s < 10; s++) {
        c.seeds.push_back(s);
    }
    std::vector<CompareRow> rows = cmd_compare(c);
    ASSERT_EQ(rows.size(), 20u);
    int wins = 0;
    for (std::size_t k = 0; k < 10; k++) {
        const CompareRow &dqa = rows[2 * k], &dcqo = rows[2 * k + 1];
        EXPECT_EQ(dqa.algorithm, Algorithm::kDqa);
        EXPECT_EQ(dqa.cx_two_qubit, 1440u);
        EXPECT_EQ(dcqo.cx_two_qubit, 1440u);
        wins += *dcqo.success_probability >= *dqa.success_probability;
    }
    EXPECT_GT(wins, 5);
}

TEST(cmd_compare, deterministic_and_validated) {
    CompareConfig c;
    c.base.problem.source = ProblemSource::kRandomSpinGlass;
    c.base.problem.size = 5;
    c.base.optimizer.max_iterations = 30;
    c.algorithms = {Algorithm::kQaoa, Algorithm::kHdcqo};
    c.seeds = {4, 5};
    c.output_json = temp_path("compare.json");
    c.output_csv = temp_path("compare.csv");
    std::string a = format_compare_csv(cmd_compare(c));
    std::string json_a = read_file(c.output_json);
    std::string b = format_compare_csv(cmd_compare(c));
    EXPECT_EQ(a, b);
    EXPECT_EQ(json_a, read_file(c.output_json));
    EXPECT_EQ(a, read_file(c.output_csv));
    EXPECT_EQ(json::parse(json_a)["rows"].size(), 4u);
    std::filesystem::remove(c.output_json);
    std::filesystem::remove(c.output_csv);

    c.algorithms.clear();
    EXPECT_THROW(cmd_compare(c), ConfigError);
    c.algorithms = {Algorithm::kDqa};
    c.seeds.clear();
    EXPECT_THROW(cmd_compare(c), ConfigError);
}

TEST(cmd_lns, reaches_optimum_and_validates) {
    LnsConfig c;
    c.problem.source = ProblemSource::kDenseQubo;
    c.problem.size = 12;
    c.problem.seed = 2;
    c.k = 6;
    c.budget = 50;
    LnsRunResult r = cmd_lns(c);
    ASSERT_TRUE(r.optimum.has_value());
    EXPECT_GE(r.lns.cost, *r.optimum - 1e-9);
    json j = json::parse(format_lns_json(r));
    EXPECT_EQ(j["assignment"].get<std::string>().size(), 12u);

    c.problem.source = ProblemSource::kRandomSpinGlass;
    EXPECT_THROW(cmd_lns(c), ConfigError);
    c.problem.source = ProblemSource::kDenseQubo;
    c.k = 30;
    EXPECT_THROW(cmd_lns(c), ConfigError);
    EXPECT_THROW(parse_subsolver("exact"), ConfigError);
}

TEST(parallel_for, runs_each_index_once_and_propagates_errors) {
    for (std::size_t workers : {1u, 3u}) {
        std::vector<int> hits(50, 0);
        parallel_for(hits.size(), workers, [&](std::size_t i) { hits[i]++; });
        EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        EXPECT_THROW(parallel_for(10, workers,
                                  [](std::size_t i) {
                                      if (i == 4) {
                                          throw std::runtime_error("boom");
                                      }
                                  }),
                     std::runtime_error);
    }
    parallel_for(0, 2, [](std::size_t) { FAIL(); });
}

TEST(worker_count, environment) {
    setenv("DCQO_WORKERS", "3", 1);
    EXPECT_EQ(worker_count(), 3u);
    setenv("DCQO_WORKERS", "zero", 1);
    EXPECT_THROW(worker_count(), std::invalid_argument);
    setenv("DCQO_WORKERS", "0", 1);
    EXPECT_THROW(worker_count(), std::invalid_argument);
    unsetenv("DCQO_WORKERS");
    EXPECT_GE(worker_count(), 1u);
}

TEST(cli, exit_codes) {
    std::string out = temp_path("cli.json");
    EXPECT_EQ(run_cli("solve --tsp " + data_path("tsp3.json") + " --alg dcqo --steps 2 --time 0.2 --cutoff 0.1 -o " +
                          out,
                      "ok"),
              0);
    json j = json::parse(read_file(out));
    EXPECT_EQ(j["gate_counts"]["cx"]["two_qubit"].get<int>(), 36);
    EXPECT_EQ(run_cli("solve --alg dqa", "nosource"), 2);
    EXPECT_EQ(run_cli("solve --random-spin-glass 4 --alg nope", "badalg"), 2);
    EXPECT_EQ(run_cli("solve --random-spin-glass 4 --time -1", "badtime"), 2);
    EXPECT_EQ(run_cli("compare --dense-qubo 4 --seeds 1", "noalgs"), 2);
    EXPECT_EQ(run_cli("solve --tsp /nonexistent/x.json", "missing"), 1);
    json err = json::parse(read_file(temp_path("missing.err")));
    EXPECT_EQ(err["error"]["kind"], "domain");
    EXPECT_EQ(run_cli("--help", "help"), 0);
    std::filesystem::remove(out);
}

TEST(cli, solve_is_deterministic) {
    std::string args = "solve --random-spin-glass 10 --seed 7 --alg dqa --time 10 --steps 64 --shots 0 -o ";
    ASSERT_EQ(run_cli(args + temp_path("a.json"), "det_a"), 0);
    ASSERT_EQ(run_cli(args + temp_path("b.json"), "det_b"), 0);
    json a = json::parse(read_file(temp_path("a.json")));
    json b = json::parse(read_file(temp_path("b.json")));
    EXPECT_TRUE(a["metrics"].contains("success_probability"));
    EXPECT_EQ(without_wall_time(a), without_wall_time(b));
}
