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
#include <stdexcept>

#include "dcqo/circuit.h"

namespace dcqo {

namespace {

double step_lambda(int step, int N) {
    return step == N ? 1.0 : lambda_of_fraction(static_cast<double>(step) / N);
}

void check_model(const IsingModel &m) {
    if (m.n == 0 || m.h.size() != m.n) {
        throw std::invalid_argument("invalid Ising model");
    }
}

void prepare_uniform(Circuit &c) {
    for (std::uint32_t q = 0; q < c.width(); q++) {
        c.append(Gate::h(q));
    }
}

void append_tagged(Circuit &c, Gate g, int step) {
    g.step = step;
    c.append(g);
}

void append_dqa_step(Circuit &c, const IsingModel &m, double dt, double lam, int step) {
    for (std::uint32_t q = 0; q < m.n; q++) {
        append_tagged(c, Gate::rx(q, -2.0 * dt * (1.0 - lam)), step);
    }
    for (std::uint32_t q = 0; q < m.n; q++) {
        append_tagged(c, Gate::rz(q, 2.0 * dt * lam * m.h[q]), step);
    }
    for (const Coupling &cp : m.couplings) {
        append_tagged(c, Gate::rzz(cp.i, cp.j, 2.0 * dt * lam * cp.value), step);
    }
}

void append_cd_step(Circuit &c, const IsingModel &m, double scale, int step) {
    for (std::uint32_t q = 0; q < m.n; q++) {
        append_tagged(c, Gate::ry(q, 2.0 * scale * m.h[q]), step);
    }
    for (const Coupling &cp : m.couplings) {
        double theta = 2.0 * scale * cp.value;
        append_tagged(c, Gate::ryz(cp.i, cp.j, theta), step);
        append_tagged(c, Gate::rzy(cp.i, cp.j, theta), step);
    }
}

}  // namespace

Circuit build_dqa_circuit(const IsingModel &m, double T, int N) {
    check_model(m);
    if (N < 1) {
        throw std::invalid_argument("DQA needs N >= 1");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument("DQA needs a positive finite T");
    }
    Circuit c(m.n);
    c.metadata.builder = "dqa";
    c.metadata.T = T;
    c.metadata.steps = N;
    prepare_uniform(c);
    double dt = T / N;
    for (int step = 1; step <= N; step++) {
        append_dqa_step(c, m, dt, step_lambda(step, N), step);
    }
    return c;
}

std::string to_string(DcqoVariant v) {
    return v == DcqoVariant::kCdOnly ? "cd-only" : "full";
}

Circuit build_dcqo_circuit(const IsingModel &m, int N, const DcqoOptions &options) {
    check_model(m);
    if (N < 1) {
        throw std::invalid_argument("DCQO needs N >= 1");
    }
    bool full = options.variant == DcqoVariant::kFull;
    if (full && (!(options.T > 0.0) || !std::isfinite(options.T))) {
        throw std::invalid_argument("the full DCQO variant needs a positive finite T");
    }
    Circuit c(m.n);
    c.metadata.builder = full ? "dcqo-full" : "dcqo";
    c.metadata.T = full ? options.T : 0.0;
    c.metadata.steps = N;
    c.metadata.normalization = to_string(options.normalization);
    for (const CdStepInfo &s : cd_step_table(m, N, options.normalization)) {
        c.metadata.step_coefficients.push_back(s.coefficient);
    }
    prepare_uniform(c);
    double dt = full ? options.T / N : 0.0;
    for (int step = 1; step <= N; step++) {
        if (full) {
            append_dqa_step(c, m, dt, step_lambda(step, N), step);
        }
        append_cd_step(c, m, cd_step_scale(m, step, N, options.normalization), step);
    }
    return c;
}

Circuit build_dcqo_circuit(const IsingModel &m, int N, DcqoVariant variant, double T) {
    DcqoOptions options;
    options.variant = variant;
    options.T = T;
    return build_dcqo_circuit(m, N, options);
}

Circuit build_qaoa_circuit(const IsingModel &m, int p, std::span<const double> params) {
    check_model(m);
    if (p < 1) {
        throw std::invalid_argument("QAOA needs p >= 1");
    }
    if (params.size() != static_cast<std::size_t>(2 * p)) {
        throw std::invalid_argument("QAOA with p = " + std::to_string(p) + " takes " + std::to_string(2 * p) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    Circuit c(m.n);
    c.metadata.builder = "qaoa";
    c.metadata.steps = p;
    prepare_uniform(c);
    for (int l = 0; l < p; l++) {
        double gamma = params[2 * l];
        double beta = params[2 * l + 1];
        for (std::uint32_t q = 0; q < m.n; q++) {
            append_tagged(c, Gate::rz(q, 2.0 * gamma * m.h[q]), l + 1);
        }
        for (const Coupling &cp : m.couplings) {
            append_tagged(c, Gate::rzz(cp.i, cp.j, 2.0 * gamma * cp.value), l + 1);
        }
        for (std::uint32_t q = 0; q < m.n; q++) {
            append_tagged(c, Gate::rx(q, 2.0 * beta), l + 1);
        }
    }
    return c;
}

std::string to_string(AnsatzVariant v) {
    switch (v) {
        case AnsatzVariant::kTwoParam:
            return "two-param";
        case AnsatzVariant::kPerOneBody:
            return "per-one-body";
        case AnsatzVariant::kYzyOnly:
            return "y-zy-only";
    }
    return "?";
}

AnsatzVariant parse_ansatz_variant(std::string_view name) {
    if (name == "two-param") {
        return AnsatzVariant::kTwoParam;
    }
    if (name == "per-one-body") {
        return AnsatzVariant::kPerOneBody;
    }
    if (name == "y-zy-only") {
        return AnsatzVariant::kYzyOnly;
    }
    throw std::invalid_argument("unknown ansatz variant '" + std::string(name) + "'");
}

AnsatzSpec AnsatzSpec::make(AnsatzVariant variant, int layers) {
    if (layers < 0) {
        throw std::invalid_argument("layer count must be nonnegative");
    }
    AnsatzSpec s;
    s.variant = variant;
    s.layers = layers;
    s.include_yz = variant != AnsatzVariant::kYzyOnly;
    return s;
}

std::size_t parameter_count(const AnsatzSpec &spec, std::size_t n) {
    if (spec.layers < 0) {
        throw std::invalid_argument("layer count must be nonnegative");
    }
    std::size_t p = static_cast<std::size_t>(spec.layers);
    return spec.variant == AnsatzVariant::kTwoParam ? 2 * p : (n + 1) * p;
}

Circuit build_hdcqo_circuit(const IsingModel &m, const AnsatzSpec &spec, std::span<const double> params) {
    check_model(m);
    std::size_t expected = parameter_count(spec, m.n);
    if (params.size() != expected) {
        throw std::invalid_argument("ansatz " + to_string(spec.variant) + " with " + std::to_string(spec.layers) +
                                    " layers takes " + std::to_string(expected) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    Circuit c(m.n);
    c.metadata.builder = "hdcqo";
    c.metadata.steps = spec.layers;
    prepare_uniform(c);
    std::size_t stride = spec.variant == AnsatzVariant::kTwoParam ? 2 : m.n + 1;
    for (int l = 0; l < spec.layers; l++) {
        std::span<const double> layer = params.subspan(static_cast<std::size_t>(l) * stride, stride);
        double beta = layer[stride - 1];
        for (std::uint32_t q = 0; q < m.n; q++) {
            double a = spec.variant == AnsatzVariant::kTwoParam ? m.h[q] * layer[0] : layer[q];
            append_tagged(c, Gate::ry(q, 2.0 * a), l + 1);
        }
        for (const Coupling &cp : m.couplings) {
            double theta = 2.0 * beta * cp.value;
            if (spec.include_yz) {
                append_tagged(c, Gate::ryz(cp.i, cp.j, theta), l + 1);
            }
            append_tagged(c, Gate::rzy(cp.i, cp.j, theta), l + 1);
        }
    }
    return c;
}

}  // namespace dcqo
