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
#include <numbers>
#include <set>
#include <stdexcept>

#include "dcqo/circuit.h"

namespace dcqo {

namespace {

double folded_magnitude(double theta) {
    return std::abs(std::remainder(theta, 2.0 * std::numbers::pi));
}

Circuit empty_like(const Circuit &c) {
    Circuit out(c.width());
    out.metadata = c.metadata;
    return out;
}

}  // namespace

Circuit apply_gate_cutoff(const Circuit &c, double threshold) {
    if (!(threshold >= 0.0)) {
        throw std::invalid_argument("cutoff threshold must be nonnegative");
    }
    Circuit out = empty_like(c);
    std::size_t removed = 0;
    std::size_t kept = 0;
    for (const Gate &g : c.gates()) {
        if (is_rotation(g.kind)) {
            if (folded_magnitude(g.angle()) < threshold) {
                removed++;
                continue;
            }
            kept++;
        }
        out.append(g);
    }
    out.metadata.gate_cutoff_applied = true;
    out.metadata.gate_cutoff = threshold;
    out.metadata.gates_removed = c.metadata.gates_removed + removed;
    out.metadata.gates_kept = kept;
    return out;
}

Circuit apply_step_cutoff(const Circuit &c, double threshold) {
    if (!(threshold >= 0.0)) {
        throw std::invalid_argument("cutoff threshold must be nonnegative");
    }
    const std::vector<double> &coef = c.metadata.step_coefficients;
    if (coef.empty()) {
        throw std::invalid_argument("step cutoff needs a circuit with recorded CD step strengths");
    }
    std::set<int> dropped;
    for (std::size_t k = 0; k < coef.size(); k++) {
        if (coef[k] < threshold) {
            dropped.insert(static_cast<int>(k) + 1);
        }
    }
    Circuit out = empty_like(c);
    for (const Gate &g : c.gates()) {
        if (g.step != 0 && dropped.count(g.step) != 0) {
            continue;
        }
        out.append(g);
    }
    out.metadata.step_cutoff_applied = true;
    out.metadata.step_cutoff = threshold;
    out.metadata.steps_dropped.assign(dropped.begin(), dropped.end());
    return out;
}

}  // namespace dcqo
