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


#ifndef DCQO_OPTIMIZER_H
#define DCQO_OPTIMIZER_H

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcqo {

enum class OptimizerMethod { kNelderMead, kCoordinateDescent };

std::string to_string(OptimizerMethod m);
OptimizerMethod parse_optimizer_method(const std::string &name);

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::kNelderMead;
    int max_iterations = 500;
    /// Nelder-Mead stops when the simplex cost spread drops below this.
    double tolerance = 1e-8;
    int restarts = 1;
    std::uint64_t seed = 0;
    /// Initial simplex edge (Nelder-Mead) or probe step (coordinate descent).
    double initial_step = 0.25;

    void validate() const;
};

using CostFunction = std::function<double(std::span<const double>)>;

struct MinimizeResult {
    std::vector<double> x;
    double cost = 0.0;
    /// Best cost after each iteration; entry 0 is the starting point.
    std::vector<double> trace;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

class NonFiniteCostError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Nelder-Mead uses reflection 1, expansion 2, contraction 0.5 and shrink
/// 0.5. Coordinate descent is a compass search that halves its step after a
/// sweep without improvement and stops once the step is below 1e-7.
MinimizeResult minimize(const CostFunction &cost, std::vector<double> x0, const OptimizerConfig &cfg);

}  // namespace dcqo

#endif
