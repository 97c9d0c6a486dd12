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
#include <gtest/gtest.h>
#include <numbers>

#include "dcqo/circuit.h"
#include "dcqo/problems.h"
#include "dcqo/simulator.h"
#include "dense_oracle.h"

using namespace dcqo;
using std::numbers::pi;

namespace {

IsingModel dense_model(std::size_t n, std::uint64_t seed) {
    return qubo_to_ising(dense_qubo_instance(n, seed));
}

}  // namespace

TEST(circuit, append_validates) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::rx(2, 0.1)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::rzz(1, 1, 0.1)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::rz(0, std::nan(""))), std::invalid_argument);
    c.append(Gate::cx(1, 0));
    EXPECT_EQ(c.size(), 1u);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(dqa, gate_structure) {
    IsingModel m = random_spin_glass(3, 1);
    Circuit c = build_dqa_circuit(m, 2.0, 4);
    // 3 H + 4 * (3 RX + 3 RZ + 3 RZZ)
    EXPECT_EQ(c.size(), 3u + 4u * 9u);
    const Gate &first_rx = c.gates()[3];
    EXPECT_EQ(first_rx.kind, GateKind::kRX);
    double lam = lambda_at(0.5, 2.0);
    EXPECT_NEAR(first_rx.params[0], -2 * 0.5 * (1 - lam), 1e-15);
    const Gate &rz = c.gates()[6];
    EXPECT_EQ(rz.kind, GateKind::kRZ);
    EXPECT_NEAR(rz.params[0], 2 * 0.5 * lam * m.h[0], 1e-15);
    EXPECT_THROW(build_dqa_circuit(m, 0.0, 4), std::invalid_argument);
    EXPECT_THROW(build_dqa_circuit(m, 1.0, 0), std::invalid_argument);
}

TEST(dqa, transverse_field_keeps_uniform_state) {
    // A single step with lambda(1 / N) ~ 0 is an RX layer up to tiny RZ terms;
    // with an all-zero problem it is exactly a transverse-field rotation.
    IsingModel m = IsingModel::make(3, {0, 0, 0}, {});
    StateVector s = run(build_dqa_circuit(m, 0.3, 1));
    for (double p : probability_vector(s)) {
        EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    }
}

TEST(gate_counts, closed_forms) {
    for (std::size_t n : {4u, 9u, 16u}) {
        IsingModel m = dense_model(n, 3);
        std::size_t pairs = n * (n - 1) / 2;
        ASSERT_EQ(m.couplings.size(), pairs);
        GateCounts dqa = count_gates(lower_to_cx(build_dqa_circuit(m, 1.0, 6)));
        EXPECT_EQ(dqa.of(GateKind::kCX), 6 * n * (n - 1));
        GateCounts cd = count_gates(lower_to_cx(build_dcqo_circuit(m, 3, DcqoVariant::kCdOnly)));
        EXPECT_EQ(cd.of(GateKind::kCX), 3 * n * (n - 1));
        GateCounts unfused = count_gates(lower_to_cx(build_dcqo_circuit(m, 3, DcqoVariant::kCdOnly), false));
        EXPECT_EQ(unfused.of(GateKind::kCX), 3 * 2 * n * (n - 1));
        GateCounts ms = count_gates(lower_to_ms(build_dcqo_circuit(m, 3, DcqoVariant::kCdOnly)));
        EXPECT_EQ(ms.of(GateKind::kMS), 3 * n * (n - 1));
        EXPECT_EQ(ms.two_qubit, 3 * n * (n - 1));
    }
}

TEST(gate_counts, sixteen_qubit_captions) {
    IsingModel m = dense_model(16, 1);
    EXPECT_EQ(count_gates(lower_to_cx(build_dqa_circuit(m, 1.0, 6))).of(GateKind::kCX), 1440u);
    std::vector<double> qaoa_params{0.1, 0.2};
    EXPECT_EQ(count_gates(lower_to_cx(build_qaoa_circuit(m, 1, qaoa_params))).of(GateKind::kCX), 240u);
    AnsatzSpec spec = AnsatzSpec::make(AnsatzVariant::kTwoParam, 1);
    std::vector<double> h_params{0.1, 0.2};
    EXPECT_EQ(count_gates(lower_to_cx(build_hdcqo_circuit(m, spec, h_params))).of(GateKind::kCX), 240u);
    EXPECT_EQ(count_gates(Circuit(3)).total, 0u);
}

TEST(dcqo, cd_only_is_independent_of_T) {
    IsingModel m = random_spin_glass(6, 4);
    Circuit a = build_dcqo_circuit(m, 8, DcqoVariant::kCdOnly, 0.005);
    Circuit b = build_dcqo_circuit(m, 8, DcqoVariant::kCdOnly, 10.0);
    EXPECT_TRUE(a.same_gates(b));
}

TEST(dcqo, single_spin_rotation) {
    IsingModel m = IsingModel::make(1, {1.0}, {});
    Circuit c = build_dcqo_circuit(m, 1, DcqoVariant::kCdOnly);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.gates()[1].kind, GateKind::kRY);
    // N = 1: the only step is the last, whose factor is zero.
    EXPECT_EQ(c.gates()[1].params[0], 0.0);
    Circuit two = build_dcqo_circuit(m, 2, DcqoVariant::kCdOnly);
    double theta = two.gates()[1].params[0];
    double expect = 2.0 * step_factor(1, 2) * (-2.0 * alpha1_at(m, 0.5).alpha1);
    EXPECT_NEAR(theta, expect, 1e-15);
    // RY(theta) H |0> = (cos(theta/2) - sin(theta/2), sin(theta/2) + cos(theta/2)) / sqrt 2
    std::vector<double> p = probability_vector(run(two));
    double c0 = std::cos(theta / 2), s0 = std::sin(theta / 2);
    EXPECT_NEAR(p[0], 0.5 * (c0 - s0) * (c0 - s0), 1e-14);
    EXPECT_NEAR(p[1], 0.5 * (c0 + s0) * (c0 + s0), 1e-14);
}

TEST(dcqo, full_variant_interleaves_dqa_and_cd) {
    IsingModel m = random_spin_glass(3, 9);
    Circuit full = build_dcqo_circuit(m, 2, DcqoVariant::kFull, 0.5);
    Circuit dqa = build_dqa_circuit(m, 0.5, 2);
    Circuit cd = build_dcqo_circuit(m, 2, DcqoVariant::kCdOnly);
    EXPECT_EQ(full.size(), dqa.size() + cd.size() - 3);
    // First step: DQA gates of step 1, then CD gates of step 1.
    std::size_t per_dqa = 9, per_cd = 9;
    for (std::size_t k = 0; k < per_dqa; k++) {
        EXPECT_EQ(full.gates()[3 + k], dqa.gates()[3 + k]);
    }
    for (std::size_t k = 0; k < per_cd; k++) {
        EXPECT_EQ(full.gates()[3 + per_dqa + k], cd.gates()[3 + k]);
    }
    EXPECT_THROW(build_dcqo_circuit(m, 2, DcqoVariant::kFull, 0.0), std::invalid_argument);
}

TEST(qaoa, zero_params_uniform_and_errors) {
    IsingModel m = random_spin_glass(4, 2);
    std::vector<double> zeros(4, 0.0);
    for (double p : probability_vector(run(build_qaoa_circuit(m, 2, zeros)))) {
        EXPECT_NEAR(p, 1.0 / 16, 1e-14);
    }
    std::vector<double> bad(3, 0.0);
    EXPECT_THROW(build_qaoa_circuit(m, 2, bad), std::invalid_argument);
}

TEST(qaoa, two_qubit_expectation_matches_dense) {
    IsingModel m = IsingModel::make(2, {0.3, -0.8}, {{0, 1, 0.6}});
    double gamma = 0.37, beta = -0.91;
    std::vector<double> params{gamma, beta};
    double got = expectation(run(build_qaoa_circuit(m, 1, params)), m);
    oracle::Mat hp = oracle::problem_hamiltonian(m);
    oracle::Mat mixer = oracle::Mat::Zero(4, 4);
    for (std::size_t q = 0; q < 2; q++) {
        mixer += oracle::pauli_string(2, {{q, 'X'}});
    }
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es_p(hp), es_m(mixer);
    oracle::cd i(0, 1);
    auto expm = [&](const Eigen::SelfAdjointEigenSolver<oracle::Mat> &es, double t) {
        return oracle::Mat(es.eigenvectors() *
                           (-i * t * es.eigenvalues().cast<oracle::cd>()).array().exp().matrix().asDiagonal() *
                           es.eigenvectors().adjoint());
    };
    oracle::Vec psi = oracle::Vec::Constant(4, 0.5);
    psi = expm(es_m, beta) * (expm(es_p, gamma) * psi);
    double expect = (psi.adjoint() * hp * psi)(0, 0).real();
    EXPECT_NEAR(got, expect, 1e-12);
}

TEST(hdcqo, parameter_layout) {
    IsingModel m = random_spin_glass(4, 3);
    EXPECT_EQ(parameter_count(AnsatzSpec::make(AnsatzVariant::kTwoParam, 3), 4), 6u);
    EXPECT_EQ(parameter_count(AnsatzSpec::make(AnsatzVariant::kPerOneBody, 3), 4), 15u);
    EXPECT_EQ(parameter_count(AnsatzSpec::make(AnsatzVariant::kYzyOnly, 1), 16), 17u);
    AnsatzSpec yzy = AnsatzSpec::make(AnsatzVariant::kYzyOnly, 1);
    std::vector<double> p{0.1, 0.2, 0.3, 0.4, 0.5};
    Circuit c = build_hdcqo_circuit(m, yzy, p);
    EXPECT_EQ(count_gates(c).of(GateKind::kRYZ), 0u);
    EXPECT_EQ(count_gates(c).of(GateKind::kRZY), 6u);
    EXPECT_NEAR(c.gates()[4 + 2].params[0], 0.6, 1e-15);
    EXPECT_NEAR(c.gates()[8].params[0], 2 * 0.5 * m.couplings[0].value, 1e-15);
    EXPECT_THROW(build_hdcqo_circuit(m, yzy, std::vector<double>(4)), std::invalid_argument);
    AnsatzSpec two = AnsatzSpec::make(AnsatzVariant::kTwoParam, 1);
    std::vector<double> q{0.25, -0.5};
    Circuit t = build_hdcqo_circuit(m, two, q);
    EXPECT_NEAR(t.gates()[5].params[0], 2 * m.h[1] * 0.25, 1e-15);
    EXPECT_EQ(t.gates()[8].kind, GateKind::kRYZ);
    EXPECT_EQ(t.gates()[9].kind, GateKind::kRZY);
}

TEST(hdcqo, zero_params_uniform) {
    IsingModel m = random_spin_glass(4, 3);
    AnsatzSpec spec = AnsatzSpec::make(AnsatzVariant::kPerOneBody, 2);
    std::vector<double> zeros(parameter_count(spec, 4), 0.0);
    for (double p : probability_vector(run(build_hdcqo_circuit(m, spec, zeros)))) {
        EXPECT_NEAR(p, 1.0 / 16, 1e-14);
    }
}

TEST(gate_cutoff, removes_small_angles_and_records_counts) {
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::rx(0, 0.05));
    c.append(Gate::rz(1, 2 * pi + 0.01));
    c.append(Gate::rzz(0, 1, 0.5));
    c.append(Gate::ms(0, 1, 0.1, 0.2, 0.01));
    c.append(Gate::cx(0, 1));
    Circuit out = apply_gate_cutoff(c, 0.1);
    EXPECT_EQ(out.size(), 3u);
    EXPECT_EQ(out.metadata.gates_removed, 3u);
    EXPECT_EQ(out.metadata.gates_kept, 1u);
    EXPECT_TRUE(apply_gate_cutoff(c, 0.0).same_gates(c));
    EXPECT_THROW(apply_gate_cutoff(c, -1), std::invalid_argument);
}

TEST(step_cutoff, thresholds) {
    IsingModel m = random_spin_glass(10, 0);
    Circuit c = build_dcqo_circuit(m, 20, DcqoVariant::kCdOnly);
    EXPECT_TRUE(apply_step_cutoff(c, 0.0).same_gates(c));
    double peak = *std::max_element(c.metadata.step_coefficients.begin(), c.metadata.step_coefficients.end());
    Circuit none = apply_step_cutoff(c, peak * 1.01);
    EXPECT_EQ(none.size(), 10u);  // only the H layer is left
    EXPECT_EQ(none.metadata.steps_dropped.size(), 20u);
    Circuit half = apply_step_cutoff(c, 0.005);
    std::size_t dropped = half.metadata.steps_dropped.size();
    EXPECT_GE(dropped, 7u);
    EXPECT_LE(dropped, 14u);
    EXPECT_THROW(apply_step_cutoff(build_dqa_circuit(m, 1.0, 4), 0.1), std::invalid_argument);
}

namespace {

Gate random_gate(GateKind kind, std::size_t n, Rng &rng) {
    std::uint32_t a = static_cast<std::uint32_t>(rng.next() % n);
    std::uint32_t b = static_cast<std::uint32_t>(rng.next() % (n - 1));
    if (b >= a) {
        b++;
    }
    double t = rng.uniform(-3 * pi, 3 * pi);
    switch (kind) {
        case GateKind::kRZZ:
            return Gate::rzz(a, b, t);
        case GateKind::kRYZ:
            return Gate::ryz(a, b, t);
        case GateKind::kRZY:
            return Gate::rzy(a, b, t);
        case GateKind::kRYY:
            return Gate::ryy(a, b, t);
        default:
            return Gate::rx(a, t);
    }
}

}  // namespace

TEST(lowering, cx_single_gates_match_dense) {
    Rng rng(12);
    for (GateKind kind : {GateKind::kRZZ, GateKind::kRYZ, GateKind::kRZY, GateKind::kRYY}) {
        for (int trial = 0; trial < 100; trial++) {
            std::size_t n = 2 + trial % 3;
            Circuit c(n);
            c.append(random_gate(kind, n, rng));
            Circuit low = lower_to_cx(c);
            EXPECT_EQ(count_gates(low).of(GateKind::kCX), 2u);
            EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(low), oracle::circuit_unitary(c)), 1e-9);
        }
    }
}

TEST(lowering, fused_pair_uses_two_cx) {
    Rng rng(13);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 2 + trial % 3;
        Gate g = random_gate(GateKind::kRYZ, n, rng);
        Circuit c(n);
        c.append(g);
        c.append(Gate::rzy(g.qubits[0], g.qubits[1], rng.uniform(-3 * pi, 3 * pi)));
        Circuit low = lower_to_cx(c);
        EXPECT_EQ(count_gates(low).of(GateKind::kCX), 2u);
        EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(low), oracle::circuit_unitary(c)), 1e-9);
        Circuit reversed(n);
        reversed.append(c.gates()[1]);
        reversed.append(c.gates()[0]);
        Circuit low_rev = lower_to_cx(reversed);
        EXPECT_EQ(count_gates(low_rev).of(GateKind::kCX), 2u);
        EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(low_rev), oracle::circuit_unitary(reversed)),
                  1e-9);
        EXPECT_EQ(count_gates(lower_to_cx(c, false)).of(GateKind::kCX), 4u);
    }
}

TEST(lowering, random_three_qubit_circuits) {
    Rng rng(14);
    for (int trial = 0; trial < 30; trial++) {
        IsingModel m = random_spin_glass(3, 100 + trial);
        Circuit c = build_dcqo_circuit(m, 3, DcqoVariant::kFull, 0.7);
        Circuit q(3);
        for (int k = 0; k < 12; k++) {
            q.append(random_gate(static_cast<GateKind>(1 + rng.next() % 7), 3, rng));
        }
        for (const Circuit *src : {&c, &q}) {
            oracle::Mat u = oracle::circuit_unitary(*src);
            EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(lower_to_cx(*src)), u), 1e-9);
            EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(lower_to_ms(*src)), u), 1e-9);
        }
    }
}

TEST(lowering, ms_branches) {
    Circuit c(2);
    c.append(Gate::ryy(0, 1, pi / 4));
    Circuit low = lower_to_ms(c);
    ASSERT_EQ(low.size(), 1u);
    EXPECT_EQ(low.gates()[0], Gate::ms(0, 1, pi / 2, pi / 2, pi / 4));

    Rng rng(15);
    double edges[] = {0.0, pi / 2, pi, 1.5 * pi, 2 * pi};
    for (GateKind kind : {GateKind::kRYY, GateKind::kRZY, GateKind::kRYZ, GateKind::kRZZ}) {
        for (int branch = 0; branch < 4; branch++) {
            for (int trial = 0; trial < 100; trial++) {
                double t = trial < 2 ? edges[branch + trial]
                                     : rng.uniform(edges[branch], edges[branch + 1]);
                if (trial % 3 == 0) {
                    t -= 2 * pi;
                }
                std::size_t n = 2 + trial % 3;
                Gate g = random_gate(kind, n, rng);
                g.params[0] = t;
                Circuit src(n);
                src.append(g);
                Circuit ms = lower_to_ms(src);
                ASSERT_EQ(count_gates(ms).of(GateKind::kMS), 1u);
                EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(ms), oracle::circuit_unitary(src)), 1e-9)
                    << gate_name(kind) << " " << t;
            }
        }
    }
}

TEST(lowering, fused_block_uses_two_ms_and_errors) {
    Circuit c(2);
    c.append(Gate::ryz(0, 1, 0.4));
    c.append(Gate::rzy(0, 1, 0.4));
    EXPECT_EQ(count_gates(lower_to_ms(c)).two_qubit, 2u);
    Circuit native(2);
    native.append(Gate::ms(0, 1, 0, 0, 0.1));
    EXPECT_THROW(lower_to_cx(native), std::invalid_argument);
    Circuit cx(2);
    cx.append(Gate::cx(0, 1));
    EXPECT_THROW(lower_to_ms(cx), std::invalid_argument);
}

TEST(circuit_io, round_trip) {
    IsingModel m = random_spin_glass(3, 2);
    Circuit c = apply_gate_cutoff(lower_to_ms(build_dcqo_circuit(m, 3, DcqoVariant::kCdOnly)), 0.01);
    Circuit back = parse_circuit_text(format_circuit_text(c));
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t k = 0; k < c.size(); k++) {
        Gate g = c.gates()[k];
        g.step = 0;
        EXPECT_EQ(back.gates()[k], g);
    }
    std::string meta = circuit_metadata_json(c);
    EXPECT_NE(meta.find("\"gate_cutoff\""), std::string::npos);
    EXPECT_NE(meta.find("\"removed\""), std::string::npos);
    EXPECT_THROW(parse_circuit_text("qubits 2\nRX 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit_text("RX 0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit_text("qubits 2\nFOO 0\n"), std::invalid_argument);
}
