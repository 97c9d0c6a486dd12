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


#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "dcqo/simulator.h"

namespace dcqo {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Matrix of sum_k w_k P_k for one- and two-body Pauli words.
Matrix pauli_sum_matrix(std::size_t n, const PauliTermList &terms) {
    std::size_t dim = std::size_t{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    const Amplitude i{0.0, 1.0};
    for (const PauliTerm &t : terms) {
        std::size_t flip = 0;
        std::size_t sign = 0;
        Amplitude phase = 1.0;
        auto add = [&](std::uint32_t q, Pauli p) {
            std::size_t b = std::size_t{1} << q;
            if (p == Pauli::kX || p == Pauli::kY) {
                flip |= b;
            }
            if (p == Pauli::kY || p == Pauli::kZ) {
                sign |= b;
            }
            if (p == Pauli::kY) {
                phase *= i;
            }
        };
        add(t.q0, t.p0);
        if (t.two_body()) {
            add(t.q1, t.p1);
        }
        for (std::size_t x = 0; x < dim; x++) {
            double s = (__builtin_popcountll(x & sign) & 1) ? -1.0 : 1.0;
            out(static_cast<Eigen::Index>(x ^ flip), static_cast<Eigen::Index>(x)) += t.weight * s * phase;
        }
    }
    return out;
}

}  // namespace

std::string to_string(EvolutionVariant v) {
    switch (v) {
        case EvolutionVariant::kAnneal:
            return "anneal";
        case EvolutionVariant::kFull:
            return "full";
        case EvolutionVariant::kCdOnly:
            return "cd-only";
    }
    return "?";
}

EvolutionVariant parse_evolution_variant(const std::string &name) {
    for (EvolutionVariant v : {EvolutionVariant::kAnneal, EvolutionVariant::kFull, EvolutionVariant::kCdOnly}) {
        if (to_string(v) == name) {
            return v;
        }
    }
    throw std::invalid_argument("unknown evolution variant '" + name + "'");
}

StateVector exact_evolve(const IsingModel &m, EvolutionVariant variant, double T, int grid, CdNormalization norm) {
    if (m.n == 0 || m.n > kMaxExactWidth) {
        throw std::invalid_argument("exact_evolve supports 1 to " + std::to_string(kMaxExactWidth) + " spins");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument("exact_evolve needs a positive finite T");
    }
    if (grid < 1) {
        throw std::invalid_argument("exact_evolve needs grid >= 1");
    }
    std::size_t n = m.n;
    std::size_t dim = std::size_t{1} << n;

    PauliTermList x_terms;
    for (std::uint32_t q = 0; q < n; q++) {
        x_terms.push_back({q, 0, Pauli::kX, Pauli::kI, -1.0});
    }
    Matrix h_i = pauli_sum_matrix(n, x_terms);
    std::vector<double> e = diagonal_energies(m);
    Matrix h_p = Matrix::Zero(dim, dim);
    for (std::size_t x = 0; x < dim; x++) {
        h_p(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = e[x];
    }
    bool with_cd = variant != EvolutionVariant::kAnneal;
    bool with_ad = variant != EvolutionVariant::kCdOnly;
    // A = i alpha_1 [H_i, H_p] = -2 alpha_1 G.
    Matrix g = with_cd ? pauli_sum_matrix(n, gauge_terms_first_order(m)) : Matrix();

    auto hamiltonian = [&](double t) {
        double lam = lambda_at(t, T);
        Matrix h = Matrix::Zero(dim, dim);
        if (with_ad) {
            h += (1.0 - lam) * h_i + lam * h_p;
        }
        if (with_cd) {
            double strength = lambda_dot_at(t, T) * (-2.0 * alpha1_at(m, lam, norm).alpha1);
            h += strength * g;
        }
        return h;
    };

    Vector psi = Vector::Constant(static_cast<Eigen::Index>(dim), std::pow(2.0, -0.5 * static_cast<double>(n)));
    double dt = T / grid;
    const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
    const double c2 = 0.5 + std::sqrt(3.0) / 6.0;
    const Amplitude i{0.0, 1.0};
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    for (int k = 0; k < grid; k++) {
        double t0 = T * k / grid;
        Matrix h1 = hamiltonian(t0 + c1 * dt);
        Matrix h2 = hamiltonian(t0 + c2 * dt);
        Matrix comm = h2 * h1 - h1 * h2;
        Matrix kmat = 0.5 * dt * (h1 + h2) - i * (std::sqrt(3.0) / 12.0 * dt * dt) * comm;
        kmat = 0.5 * (kmat + kmat.adjoint()).eval();
        solver.compute(kmat);
        const Matrix &v = solver.eigenvectors();
        Vector phases = (-i * solver.eigenvalues().cast<Amplitude>()).array().exp();
        psi = v * (phases.asDiagonal() * (v.adjoint() * psi));
    }
    StateVector out(n);
    for (std::size_t x = 0; x < dim; x++) {
        out.amplitudes()[x] = psi(static_cast<Eigen::Index>(x));
    }
    return out;
}

}  // namespace dcqo
