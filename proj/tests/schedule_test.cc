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

#include "dcqo/schedule.h"
#include "dense_oracle.h"

using namespace dcqo;

namespace {

// Coefficient minimizing Tr(G^2), G = dH/dlambda + i[A, H], for the ansatz
// A = i alpha [H_i, H_p]. G is affine in alpha, so the minimizer is closed form.
double variational_alpha(const IsingModel &m, double lam) {
    oracle::Mat hi = oracle::transverse_field(m.n);
    IsingModel no_offset = m;
    no_offset.offset = 0;
    oracle::Mat hp = oracle::problem_hamiltonian(no_offset);
    oracle::Mat h = (1 - lam) * hi + lam * hp;
    oracle::Mat b = hp - hi;
    oracle::cd i(0, 1);
    oracle::Mat a1 = i * (hi * hp - hp * hi);
    oracle::Mat c = i * (a1 * h - h * a1);
    double bc = (b * c).trace().real();
    double cc = (c * c).trace().real();
    return -bc / cc;
}

}  // namespace

TEST(lambda, boundaries_and_midpoint) {
    EXPECT_EQ(lambda_at(0, 3), 0.0);
    EXPECT_NEAR(lambda_at(3, 3), 1.0, 1e-15);
    EXPECT_NEAR(lambda_at(1.5, 3), 0.5, 1e-15);
    EXPECT_THROW(lambda_at(-0.1, 1), std::invalid_argument);
    EXPECT_THROW(lambda_at(1.1, 1), std::invalid_argument);
    EXPECT_THROW(lambda_at(0.5, 0), std::invalid_argument);
}

TEST(lambda, monotone) {
    double prev = 0;
    for (int k = 0; k <= 1000; k++) {
        double v = lambda_at(k / 1000.0, 1.0);
        EXPECT_GE(v, prev);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        prev = v;
    }
}

TEST(lambda_dot, vanishes_at_boundaries) {
    EXPECT_EQ(lambda_dot_at(0, 2), 0.0);
    EXPECT_NEAR(lambda_dot_at(2, 2), 0.0, 1e-15);
}

TEST(lambda_dot, matches_finite_differences) {
    double step = 1e-6;
    double fd = (lambda_at(0.3 + step, 1) - lambda_at(0.3 - step, 1)) / (2 * step);
    EXPECT_NEAR(lambda_dot_at(0.3, 1), fd, 1e-6 * std::abs(fd));
    for (double T : {0.005, 1.0, 10.0}) {
        for (int k = 1; k <= 100; k++) {
            double t = T * k / 101.0;
            double h = 1e-5 * T;
            double d = (lambda_at(t + h, T) - lambda_at(t - h, T)) / (2 * h);
            EXPECT_NEAR(lambda_dot_at(t, T), d, 1e-6 * std::abs(d) + 1e-9 / T) << T << " " << t;
        }
    }
}

TEST(step_factor, closed_form_and_relation_to_lambda_dot) {
    EXPECT_EQ(step_factor(5, 5), 0.0);
    EXPECT_THROW(step_factor(0, 5), std::invalid_argument);
    EXPECT_THROW(step_factor(6, 5), std::invalid_argument);
    int N = 20;
    for (int m = 1; m < N; m++) {
        double s = static_cast<double>(m) / N;
        double direct = std::numbers::pi * std::sin(std::numbers::pi * s) *
                        std::sin(std::numbers::pi * std::pow(std::sin(std::numbers::pi * s / 2), 2)) / (2.0 * N);
        EXPECT_NEAR(step_factor(m, N), direct, 1e-15);
        // The factor is (2 / pi) dt lambda_dot(m dt) for any T.
        double T = 0.7;
        EXPECT_NEAR(step_factor(m, N), 2.0 / std::numbers::pi * (T / N) * lambda_dot_at(T * m / N, T), 1e-14);
    }
}

TEST(schedule, sampled_grid) {
    Schedule s = Schedule::make(2.0, 4);
    ASSERT_EQ(s.lambda.size(), 4u);
    EXPECT_NEAR(s.lambda[1], 0.5, 1e-15);
    EXPECT_EQ(s.lambda[3], 1.0);
    EXPECT_NEAR(s.lambda_dot[3], 0.0, 1e-15);
    EXPECT_EQ(s.dt(), 0.5);
}

TEST(alpha1, single_spin_at_lambda_zero) {
    IsingModel m = IsingModel::make(1, {1.0}, {});
    CdCoefficient c = alpha1_at(m, 0.0);
    EXPECT_EQ(c.gamma, 1.0);
    EXPECT_EQ(c.alpha1, -0.25);
    EXPECT_EQ(alpha1_at(m, 0.0, CdNormalization::kAsPrinted).alpha1, -0.25);
}

TEST(alpha1, couplings_only_at_lambda_zero) {
    IsingModel m = IsingModel::make(3, {0, 0, 0}, {{0, 1, 0.5}, {1, 2, -1.5}});
    double sum_pairs = 0.25 + 2.25;
    CdCoefficient printed = alpha1_at(m, 0.0, CdNormalization::kAsPrinted);
    EXPECT_NEAR(printed.gamma, 4 * 2 * sum_pairs, 1e-12);
    EXPECT_NEAR(printed.alpha1, -0.25 * sum_pairs / printed.gamma, 1e-15);
    CdCoefficient var = alpha1_at(m, 0.0);
    EXPECT_NEAR(var.alpha1, 2 * printed.alpha1, 1e-15);
}

TEST(alpha1, gamma_high_order_terms) {
    // lambda = 1 isolates the quartic part of gamma.
    IsingModel m = IsingModel::make(3, {0.5, -1.0, 2.0}, {{0, 1, 0.3}, {0, 2, -0.7}, {1, 2, 1.1}});
    double h4 = std::pow(0.5, 4) + 1 + 16;
    double j2[3] = {0.09, 0.49, 1.21};
    double j4 = 2 * (j2[0] * j2[0] + j2[1] * j2[1] + j2[2] * j2[2]);
    double hj = ((0.25 + 1) * j2[0] + (0.25 + 4) * j2[1] + (1 + 4) * j2[2]);
    double tri = j2[0] * j2[1] + j2[0] * j2[2] + j2[1] * j2[2];
    EXPECT_NEAR(alpha1_at(m, 1.0).gamma, h4 + j4 + 6 * hj + 6 * tri, 1e-12);
}

TEST(alpha1, matches_variational_oracle) {
    IsingModel two = IsingModel::make(2, {0.4, -0.9}, {{0, 1, 0.7}});
    IsingModel pure = IsingModel::make(2, {0, 0}, {{0, 1, 0.7}});
    for (int k = 0; k <= 20; k++) {
        double lam = k / 20.0;
        EXPECT_NEAR(alpha1_at(two, lam).alpha1, variational_alpha(two, lam), 1e-12) << lam;
        double oracle_pure = variational_alpha(pure, lam);
        EXPECT_NEAR(alpha1_at(pure, lam).alpha1, oracle_pure, 1e-12);
        EXPECT_NEAR(alpha1_at(pure, lam, CdNormalization::kAsPrinted).alpha1, 0.5 * oracle_pure, 1e-12);
    }
    for (std::size_t n : {3u, 4u}) {
        IsingModel m = random_spin_glass(n, 17 + n);
        for (double lam : {0.0, 0.3, 0.8, 1.0}) {
            EXPECT_NEAR(alpha1_at(m, lam).alpha1, variational_alpha(m, lam), 1e-12);
        }
    }
}

TEST(alpha1, sign_and_positivity) {
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        IsingModel m = random_spin_glass(6, seed);
        for (int k = 0; k <= 10; k++) {
            CdCoefficient c = alpha1_at(m, k / 10.0);
            EXPECT_GT(c.gamma, 0.0);
            EXPECT_LE(c.alpha1, 0.0);
        }
    }
    EXPECT_THROW(alpha1_at(IsingModel::make(2, {0, 0}, {}), 0.5), DegenerateModelError);
    EXPECT_THROW(alpha1_at(IsingModel::make(1, {1}, {}), 1.5), std::invalid_argument);
}

TEST(gauge_terms, structure) {
    PauliTermList one = gauge_terms_first_order(IsingModel::make(1, {0.5}, {}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].label(), "Y0");
    EXPECT_EQ(one[0].weight, 0.5);

    PauliTermList two = gauge_terms_first_order(IsingModel::make(2, {0, 0}, {{0, 1, 0.3}}));
    ASSERT_EQ(two.size(), 4u);
    EXPECT_EQ(two[2].label(), "Y0Z1");
    EXPECT_EQ(two[3].label(), "Z0Y1");
    EXPECT_EQ(two[2].weight, 0.3);
    EXPECT_EQ(two[3].weight, 0.3);

    for (std::size_t n : {3u, 7u, 10u}) {
        EXPECT_EQ(gauge_terms_first_order(random_spin_glass(n, 1)).size(), n + n * (n - 1));
    }
}

TEST(gauge_terms, commutator_matches_dense) {
    for (std::size_t n = 1; n <= 5; n++) {
        IsingModel m = random_spin_glass(n, 40 + n);
        oracle::Mat hi = oracle::transverse_field(n);
        oracle::Mat hp = oracle::problem_hamiltonian(m);
        oracle::Mat lhs = oracle::cd(0, 1) * (hi * hp - hp * hi);
        std::size_t dim = std::size_t{1} << n;
        oracle::Mat rhs = oracle::Mat::Zero(dim, dim);
        for (const PauliTerm &t : gauge_terms_first_order(m)) {
            std::vector<std::pair<std::size_t, char>> letters{{t.q0, pauli_char(t.p0)}};
            if (t.two_body()) {
                letters.emplace_back(t.q1, pauli_char(t.p1));
            }
            rhs += t.weight * oracle::pauli_string(n, letters);
        }
        EXPECT_LT((lhs - (-2.0) * rhs).cwiseAbs().maxCoeff(), 1e-10) << n;
    }
}

TEST(cd_step_angles, values) {
    IsingModel m = random_spin_glass(4, 2);
    int N = 6;
    for (double a : cd_step_angles(m, N, N)) {
        EXPECT_EQ(a, 0.0);
    }
    EXPECT_THROW(cd_step_angles(m, 0, N), std::invalid_argument);
    EXPECT_THROW(cd_step_angles(m, N + 1, N), std::invalid_argument);
    std::vector<double> a = cd_step_angles(m, 2, N);
    PauliTermList terms = gauge_terms_first_order(m);
    double scale = step_factor(2, N) * (-2.0 * alpha1_at(m, lambda_of_fraction(2.0 / N)).alpha1);
    for (std::size_t k = 0; k < terms.size(); k++) {
        EXPECT_NEAR(a[k], scale * terms[k].weight, 1e-15);
    }
}

TEST(cd_step_angles, peak_mid_schedule) {
    IsingModel m = random_spin_glass(10, 0);
    std::vector<CdStepInfo> table = cd_step_table(m, 20);
    double peak = 0;
    int arg = 0;
    for (const CdStepInfo &s : table) {
        if (s.coefficient > peak) {
            peak = s.coefficient;
            arg = s.step;
        }
    }
    EXPECT_GT(arg, 3);
    EXPECT_LT(arg, 18);
    EXPECT_LT(table.front().coefficient, 0.1 * peak);
    EXPECT_LT(table[18].coefficient, 0.1 * peak);
    EXPECT_EQ(table.back().coefficient, 0.0);
}
