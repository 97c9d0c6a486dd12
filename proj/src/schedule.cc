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


#include "dcqo/schedule.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcqo {

namespace {

using std::numbers::pi;

void check_time(double t, double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument("total time T must be positive and finite");
    }
    if (!(t >= 0.0 && t <= T)) {
        throw std::invalid_argument("time " + std::to_string(t) + " outside [0, " + std::to_string(T) + "]");
    }
}

void check_step(int step, int N) {
    if (N < 1) {
        throw std::invalid_argument("step count N must be at least 1");
    }
    if (step < 1 || step > N) {
        throw std::invalid_argument("step " + std::to_string(step) + " outside [1, " + std::to_string(N) + "]");
    }
}

double sq(double x) {
    return x * x;
}

}  // namespace

double lambda_of_fraction(double s) {
    double inner = std::sin(0.5 * pi * s);
    return sq(std::sin(0.5 * pi * inner * inner));
}

double lambda_at(double t, double T) {
    check_time(t, T);
    return lambda_of_fraction(t / T);
}

double lambda_dot_at(double t, double T) {
    check_time(t, T);
    double s = t / T;
    double inner = std::sin(0.5 * pi * s);
    return pi * pi / (4.0 * T) * std::sin(pi * inner * inner) * std::sin(pi * s);
}

double step_factor(int step, int N) {
    check_step(step, N);
    if (step == N) {
        return 0.0;
    }
    double s = static_cast<double>(step) / N;
    double inner = std::sin(0.5 * pi * s);
    return pi * std::sin(pi * s) * std::sin(pi * inner * inner) / (2.0 * N);
}

Schedule Schedule::make(double T, int N) {
    if (N < 1) {
        throw std::invalid_argument("step count N must be at least 1");
    }
    Schedule s;
    s.T = T;
    s.N = N;
    for (int m = 1; m <= N; m++) {
        double t = (m == N) ? T : T * m / N;
        s.lambda.push_back(lambda_at(t, T));
        s.lambda_dot.push_back(lambda_dot_at(t, T));
    }
    return s;
}

std::string to_string(CdNormalization norm) {
    return norm == CdNormalization::kVariational ? "variational" : "as-printed";
}

CdNormalization parse_cd_normalization(const std::string &name) {
    if (name == "variational") {
        return CdNormalization::kVariational;
    }
    if (name == "as-printed") {
        return CdNormalization::kAsPrinted;
    }
    throw std::invalid_argument("unknown CD normalization '" + name + "'");
}

CdCoefficient alpha1_at(const IsingModel &m, double lam, CdNormalization norm) {
    if (!(lam >= 0.0 && lam <= 1.0)) {
        throw std::invalid_argument("lambda outside [0, 1]");
    }
    double h2 = 0.0;
    double h4 = 0.0;
    for (double v : m.h) {
        h2 += sq(v);
        h4 += sq(sq(v));
    }
    // Unordered pair sums; ordered i != j sums are twice these.
    double j2 = 0.0;
    double j4 = 0.0;
    double hj = 0.0;
    std::vector<double> star2(m.n, 0.0);
    std::vector<double> star4(m.n, 0.0);
    for (const Coupling &c : m.couplings) {
        double w2 = sq(c.value);
        j2 += w2;
        j4 += sq(w2);
        hj += (sq(m.h[c.i]) + sq(m.h[c.j])) * w2;
        star2[c.i] += w2;
        star2[c.j] += w2;
        star4[c.i] += sq(w2);
        star4[c.j] += sq(w2);
    }
    if (h2 == 0.0 && j2 == 0.0) {
        throw DegenerateModelError("CD coefficient undefined for a model without fields or couplings");
    }
    // sum_{i<j<k} (J_ij^2 J_ik^2 + J_ij^2 J_jk^2 + J_ik^2 J_jk^2): every pair of
    // distinct edges sharing a vertex, counted once.
    double triples = 0.0;
    for (std::size_t v = 0; v < m.n; v++) {
        triples += 0.5 * (sq(star2[v]) - star4[v]);
    }
    double a = sq(1.0 - lam) * (h2 + 4.0 * (2.0 * j2));
    double b = sq(lam) * (h4 + 2.0 * j4 + 6.0 * hj + 6.0 * triples);
    double gamma = a + b;
    if (!(gamma > 0.0)) {
        throw DegenerateModelError("CD normalization gamma is not positive");
    }
    double num = h2 + (norm == CdNormalization::kVariational ? 2.0 * j2 : j2);
    CdCoefficient out;
    out.alpha1 = -0.25 * num / gamma;
    out.gamma = gamma;
    out.lambda = lam;
    return out;
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::kI:
            return 'I';
        case Pauli::kX:
            return 'X';
        case Pauli::kY:
            return 'Y';
        case Pauli::kZ:
            return 'Z';
    }
    return '?';
}

std::string PauliTerm::label() const {
    std::string out;
    out += pauli_char(p0);
    out += std::to_string(q0);
    if (two_body()) {
        out += pauli_char(p1);
        out += std::to_string(q1);
    }
    return out;
}

PauliTermList gauge_terms_first_order(const IsingModel &m) {
    PauliTermList terms;
    terms.reserve(m.n + 2 * m.couplings.size());
    for (std::size_t i = 0; i < m.n; i++) {
        PauliTerm t;
        t.q0 = static_cast<std::uint32_t>(i);
        t.p0 = Pauli::kY;
        t.weight = m.h[i];
        terms.push_back(t);
    }
    for (const Coupling &c : m.couplings) {
        terms.push_back({c.i, c.j, Pauli::kY, Pauli::kZ, c.value});
        terms.push_back({c.i, c.j, Pauli::kZ, Pauli::kY, c.value});
    }
    return terms;
}

double cd_step_scale(const IsingModel &m, int step, int N, CdNormalization norm) {
    check_step(step, N);
    double lam = lambda_of_fraction(static_cast<double>(step) / N);
    if (step == N) {
        lam = 1.0;
    }
    return step_factor(step, N) * (-2.0 * alpha1_at(m, lam, norm).alpha1);
}

std::vector<double> cd_step_angles(const IsingModel &m, int step, int N, CdNormalization norm) {
    double scale = cd_step_scale(m, step, N, norm);
    PauliTermList terms = gauge_terms_first_order(m);
    std::vector<double> out;
    out.reserve(terms.size());
    for (const PauliTerm &t : terms) {
        out.push_back(scale * t.weight);
    }
    return out;
}

std::vector<CdStepInfo> cd_step_table(const IsingModel &m, int N, CdNormalization norm) {
    std::vector<CdStepInfo> out;
    for (int step = 1; step <= N; step++) {
        CdStepInfo info;
        info.step = step;
        info.lambda = step == N ? 1.0 : lambda_of_fraction(static_cast<double>(step) / N);
        info.factor = step_factor(step, N);
        info.alpha1 = alpha1_at(m, info.lambda, norm).alpha1;
        info.coefficient = std::abs(info.factor * 2.0 * info.alpha1);
        out.push_back(info);
    }
    return out;
}

}  // namespace dcqo
