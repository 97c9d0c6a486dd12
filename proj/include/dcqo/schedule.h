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


#ifndef DCQO_SCHEDULE_H
#define DCQO_SCHEDULE_H

#include <cstdint>
#include <string>
#include <vector>

#include "dcqo/ising.h"

namespace dcqo {

/// lambda(t) = sin^2((pi/2) sin^2(pi t / 2T)). Throws unless T > 0 and
/// 0 <= t <= T.
double lambda_at(double t, double T);
double lambda_dot_at(double t, double T);

/// lambda as a function of s = t / T in [0, 1].
double lambda_of_fraction(double s);

/// Exponent factor of Trotter step m of N in the impulse-regime product:
/// pi sin(pi m / N) sin(pi sin^2(pi m / 2N)) / (2N). Independent of T.
double step_factor(int step, int N);

struct Schedule {
    double T = 0.0;
    int N = 0;
    std::vector<double> lambda;      // lambda(m dt), m = 1..N, index m - 1
    std::vector<double> lambda_dot;  // same grid

    static Schedule make(double T, int N);
    double dt() const {
        return T / N;
    }
};

enum class CdNormalization {
    /// Numerator sum h^2 + sum_{i != j} J^2. This is the action-minimizing
    /// coefficient for the first-order ansatz.
    kVariational,
    /// Numerator sum h^2 + sum_{i < j} J^2.
    kAsPrinted,
};

std::string to_string(CdNormalization norm);
CdNormalization parse_cd_normalization(const std::string &name);

struct CdCoefficient {
    double alpha1 = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;
};

/// Thrown for models whose fields and couplings are all zero.
class DegenerateModelError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// First-order coefficient alpha_1 at schedule value lam in [0, 1]. gamma
/// uses ordered sums over i != j.
CdCoefficient alpha1_at(const IsingModel &m, double lam, CdNormalization norm = CdNormalization::kVariational);

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

char pauli_char(Pauli p);

/// Weighted Pauli word with support one (p1 == kI) or two qubits.
struct PauliTerm {
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;
    Pauli p0 = Pauli::kI;
    Pauli p1 = Pauli::kI;
    double weight = 0.0;

    bool two_body() const {
        return p1 != Pauli::kI;
    }
    /// For example "Y3" or "Y0Z2".
    std::string label() const;
};

using PauliTermList = std::vector<PauliTerm>;

/// Terms of i[H_i, H_p] / (-2): Y_i with weight h_i for every i, then for each
/// coupling (lexicographic) Y_iZ_j and Z_iY_j, each with weight J_ij.
PauliTermList gauge_terms_first_order(const IsingModel &m);

/// Exponent coefficients theta_k of step m, so the step unitary is
/// prod_k exp(-i theta_k P_k), aligned with gauge_terms_first_order(m).
std::vector<double> cd_step_angles(const IsingModel &m, int step, int N,
                                   CdNormalization norm = CdNormalization::kVariational);

/// Common scale of a step: step_factor * (-2 alpha_1(lambda(m / N))).
double cd_step_scale(const IsingModel &m, int step, int N, CdNormalization norm = CdNormalization::kVariational);

struct CdStepInfo {
    int step = 0;
    double lambda = 0.0;
    double factor = 0.0;
    double alpha1 = 0.0;
    /// |factor * 2 alpha_1|, the per-step CD strength used by the step cutoff.
    double coefficient = 0.0;
};

std::vector<CdStepInfo> cd_step_table(const IsingModel &m, int N,
                                      CdNormalization norm = CdNormalization::kVariational);

}  // namespace dcqo

#endif
