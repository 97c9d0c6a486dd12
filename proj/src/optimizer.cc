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


#include "dcqo/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dcqo {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
constexpr double kMinCompassStep = 1e-7;

class Evaluator {
   public:
    explicit Evaluator(const CostFunction &f) : f_(f) {
    }

    double operator()(const std::vector<double> &x) {
        double v = f_(x);
        count++;
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "cost is not finite (" << v << ") at [";
            for (std::size_t k = 0; k < x.size(); k++) {
                msg << (k ? ", " : "") << x[k];
            }
            msg << "]";
            throw NonFiniteCostError(msg.str());
        }
        return v;
    }

    int count = 0;

   private:
    const CostFunction &f_;
};

MinimizeResult nelder_mead(const CostFunction &cost, std::vector<double> x0, const OptimizerConfig &cfg) {
    Evaluator eval(cost);
    std::size_t d = x0.size();
    std::vector<std::vector<double>> pts(d + 1, x0);
    std::vector<double> f(d + 1);
    for (std::size_t k = 0; k < d; k++) {
        pts[k + 1][k] += cfg.initial_step;
    }
    for (std::size_t k = 0; k <= d; k++) {
        f[k] = eval(pts[k]);
    }
    MinimizeResult r;
    r.trace.push_back(f[0]);
    std::vector<std::size_t> order(d + 1);
    std::vector<double> c(d), xr(d), xe(d), xc(d);
    auto combine = [&](std::vector<double> &out, const std::vector<double> &a, const std::vector<double> &b,
                       double t) {
        for (std::size_t k = 0; k < d; k++) {
            out[k] = a[k] + t * (b[k] - a[k]);
        }
    };
    auto sort_simplex = [&]() {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    };
    sort_simplex();
    while (r.iterations < cfg.max_iterations) {
        std::size_t best = order[0];
        std::size_t worst = order[d];
        std::size_t second = order[d - 1];
        if (f[worst] - f[best] < cfg.tolerance) {
            r.converged = true;
            break;
        }
        r.iterations++;
        std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t k = 0; k < d; k++) {
            const std::vector<double> &p = pts[order[k]];
            for (std::size_t q = 0; q < d; q++) {
                c[q] += p[q] / static_cast<double>(d);
            }
        }
        combine(xr, c, pts[worst], -kReflect);
        double fr = eval(xr);
        if (fr < f[best]) {
            combine(xe, c, xr, kExpand);
            double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = xe;
                f[worst] = fe;
            } else {
                pts[worst] = xr;
                f[worst] = fr;
            }
        } else if (fr < f[second]) {
            pts[worst] = xr;
            f[worst] = fr;
        } else {
            bool accepted = false;
            if (fr < f[worst]) {
                combine(xc, c, xr, kContract);
                double fc = eval(xc);
                if (fc <= fr) {
                    pts[worst] = xc;
                    f[worst] = fc;
                    accepted = true;
                }
            } else {
                combine(xc, c, pts[worst], kContract);
                double fc = eval(xc);
                if (fc < f[worst]) {
                    pts[worst] = xc;
                    f[worst] = fc;
                    accepted = true;
                }
            }
            if (!accepted) {
                for (std::size_t k = 1; k <= d; k++) {
                    std::size_t idx = order[k];
                    combine(pts[idx], pts[best], pts[idx], kShrink);
                    f[idx] = eval(pts[idx]);
                }
            }
        }
        sort_simplex();
        r.trace.push_back(std::min(r.trace.back(), f[order[0]]));
    }
    r.x = pts[order[0]];
    r.cost = f[order[0]];
    r.evaluations = eval.count;
    return r;
}

MinimizeResult coordinate_descent(const CostFunction &cost, std::vector<double> x0, const OptimizerConfig &cfg) {
    Evaluator eval(cost);
    MinimizeResult r;
    std::vector<double> x = std::move(x0);
    double fx = eval(x);
    r.trace.push_back(fx);
    double step = cfg.initial_step;
    while (r.iterations < cfg.max_iterations) {
        if (step < kMinCompassStep) {
            r.converged = true;
            break;
        }
        r.iterations++;
        bool improved = false;
        for (std::size_t k = 0; k < x.size(); k++) {
            for (double dir : {1.0, -1.0}) {
                std::vector<double> y = x;
                y[k] += dir * step;
                double fy = eval(y);
                if (fy < fx) {
                    x = std::move(y);
                    fx = fy;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
        }
        r.trace.push_back(fx);
    }
    r.x = std::move(x);
    r.cost = fx;
    r.evaluations = eval.count;
    return r;
}

}  // namespace

std::string to_string(OptimizerMethod m) {
    return m == OptimizerMethod::kNelderMead ? "nelder-mead" : "coordinate-descent";
}

OptimizerMethod parse_optimizer_method(const std::string &name) {
    if (name == "nelder-mead") {
        return OptimizerMethod::kNelderMead;
    }
    if (name == "coordinate-descent") {
        return OptimizerMethod::kCoordinateDescent;
    }
    throw std::invalid_argument("unknown optimizer '" + name + "'");
}

void OptimizerConfig::validate() const {
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    if (!(initial_step > 0.0) || !std::isfinite(initial_step)) {
        throw std::invalid_argument("initial_step must be positive");
    }
}

MinimizeResult minimize(const CostFunction &cost, std::vector<double> x0, const OptimizerConfig &cfg) {
    cfg.validate();
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("starting point is not finite");
        }
    }
    if (x0.empty()) {
        Evaluator eval(cost);
        MinimizeResult r;
        r.cost = eval(x0);
        r.trace.push_back(r.cost);
        r.evaluations = 1;
        r.converged = true;
        return r;
    }
    if (cfg.method == OptimizerMethod::kNelderMead) {
        return nelder_mead(cost, std::move(x0), cfg);
    }
    return coordinate_descent(cost, std::move(x0), cfg);
}

}  // namespace dcqo
