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


#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcqo/simulator.h"

namespace dcqo {

namespace {

using std::numbers::pi;
constexpr Amplitude kI{0.0, 1.0};

void check_width(std::size_t n) {
    if (n < 1 || n > kMaxStateWidth) {
        throw std::invalid_argument("state width " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxStateWidth) + "]");
    }
}

inline bool odd_parity(std::size_t v) {
    v ^= v >> 32;
    v ^= v >> 16;
    v ^= v >> 8;
    v ^= v >> 4;
    return (0x6996u >> (v & 0xfu)) & 1u;
}

// Index with a zero bit inserted at position b.
inline std::size_t spread(std::size_t k, std::size_t b) {
    std::size_t low = k & ((std::size_t{1} << b) - 1);
    return ((k >> b) << (b + 1)) | low;
}

// Index with zero bits inserted at positions lo < hi.
inline std::size_t spread2(std::size_t k, std::size_t lo, std::size_t hi) {
    return spread(spread(k, lo), hi);
}

void apply_1q(std::vector<Amplitude> &a, std::size_t q, const Amplitude *u) {
    std::size_t half = a.size() / 2;
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t k = 0; k < half; k++) {
        std::size_t x0 = spread(k, q);
        std::size_t x1 = x0 | bit;
        Amplitude v0 = a[x0];
        Amplitude v1 = a[x1];
        a[x0] = u[0] * v0 + u[1] * v1;
        a[x1] = u[2] * v0 + u[3] * v1;
    }
}

void apply_2q(std::vector<Amplitude> &a, std::size_t q0, std::size_t q1, const Amplitude *u) {
    std::size_t quarter = a.size() / 4;
    std::size_t b0 = std::size_t{1} << q0;
    std::size_t b1 = std::size_t{1} << q1;
    std::size_t lo = std::min(q0, q1);
    std::size_t hi = std::max(q0, q1);
    for (std::size_t k = 0; k < quarter; k++) {
        std::size_t x = spread2(k, lo, hi);
        std::size_t idx[4] = {x, x | b0, x | b1, x | b0 | b1};
        Amplitude v[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
        for (int r = 0; r < 4; r++) {
            a[idx[r]] = u[4 * r] * v[0] + u[4 * r + 1] * v[1] + u[4 * r + 2] * v[2] + u[4 * r + 3] * v[3];
        }
    }
}

// exp(-i theta/2 P) for P = i^{|Y|} X^{flip} Z^{sign} on the qubits of
// `offsets` (local basis offsets, 2 or 4 of them). `flip` marks X/Y positions,
// `sign` marks Y/Z positions; both lie inside the gate's qubits, so every sign
// factor is fixed per local index.
template <typename V>
V narrow(Amplitude z);

template <>
Amplitude narrow(Amplitude z) {
    return z;
}

// Only reached for rotations whose matrix is real.
template <>
double narrow(Amplitude z) {
    return z.real();
}

// Calls f(x) for every index below dim whose bit q is clear.
template <typename F>
inline void for_each_base(std::size_t dim, std::size_t q, F &&f) {
    std::size_t b = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; i += 2 * b) {
        for (std::size_t x = i; x < i + b; x++) {
            f(x);
        }
    }
}

// Same with bits lo < hi both clear.
template <typename F>
inline void for_each_base(std::size_t dim, std::size_t lo, std::size_t hi, F &&f) {
    std::size_t bl = std::size_t{1} << lo;
    std::size_t bh = std::size_t{1} << hi;
    for (std::size_t i = 0; i < dim; i += 2 * bh) {
        for (std::size_t j = i; j < i + bh; j += 2 * bl) {
            for (std::size_t x = j; x < j + bl; x++) {
                f(x);
            }
        }
    }
}

// `each` visits the block base indices.
template <std::size_t D, typename V, typename Each>
void apply_pauli_rotation(std::vector<V> &a, const std::array<std::size_t, D> &offsets, Each each,
                          std::size_t flip, std::size_t sign, int y_count, double theta) {
    double c = std::cos(0.5 * theta);
    double s = std::sin(0.5 * theta);
    Amplitude yphase = 1.0;
    for (int k = 0; k < y_count; k++) {
        yphase *= kI;
    }
    // (P psi)[x ^ flip] = yphase (-1)^{|x & sign|} psi[x]
    Amplitude m = -kI * s * yphase;
    std::array<V, D> ml;
    for (std::size_t l = 0; l < D; l++) {
        ml[l] = narrow<V>(odd_parity(offsets[l] & sign) ? -m : m);
    }
    if (flip == 0) {
        std::array<V, D> f;
        for (std::size_t l = 0; l < D; l++) {
            f[l] = c + ml[l];
        }
        each([&](std::size_t x) {
            for (std::size_t l = 0; l < D; l++) {
                a[x | offsets[l]] *= f[l];
            }
        });
        return;
    }
    // Pairs (l, r) with offsets[r] = offsets[l] ^ flip, l < r.
    constexpr std::size_t P = D / 2;
    std::array<std::size_t, P> lo_off{}, hi_off{};
    std::array<V, P> m_lo{}, m_hi{};
    std::size_t found = 0;
    for (std::size_t l = 0; l < D; l++) {
        for (std::size_t r = l + 1; r < D; r++) {
            if (offsets[r] == (offsets[l] ^ flip)) {
                lo_off[found] = offsets[l];
                hi_off[found] = offsets[r];
                m_lo[found] = ml[l];
                m_hi[found] = ml[r];
                found++;
            }
        }
    }
    each([&](std::size_t x) {
        for (std::size_t p = 0; p < P; p++) {
            V &u = a[x | lo_off[p]];
            V &v = a[x | hi_off[p]];
            V vu = u;
            V vv = v;
            u = c * vu + m_hi[p] * vv;
            v = c * vv + m_lo[p] * vu;
        }
    });
}

template <typename V>
void apply_pauli_pair(std::vector<V> &a, std::size_t q0, char p0, std::size_t q1, char p1, double theta) {
    std::size_t flip = 0;
    std::size_t sign = 0;
    int y_count = 0;
    auto add = [&](std::size_t q, char p) {
        std::size_t b = std::size_t{1} << q;
        if (p == 'X' || p == 'Y') {
            flip |= b;
        }
        if (p == 'Y' || p == 'Z') {
            sign |= b;
        }
        if (p == 'Y') {
            y_count++;
        }
    };
    add(q0, p0);
    std::size_t b0 = std::size_t{1} << q0;
    if (p1 == 'I') {
        std::size_t dim = a.size();
        apply_pauli_rotation<2>(
            a, {0, b0}, [dim, q0](auto &&f) { for_each_base(dim, q0, f); }, flip, sign, y_count, theta);
        return;
    }
    add(q1, p1);
    std::size_t b1 = std::size_t{1} << q1;
    std::size_t lo = std::min(q0, q1);
    std::size_t hi = std::max(q0, q1);
    std::size_t dim = a.size();
    apply_pauli_rotation<4>(
        a, {0, b0, b1, b0 | b1}, [dim, lo, hi](auto &&f) { for_each_base(dim, lo, hi, f); }, flip, sign, y_count,
        theta);
}

template <typename V>
void apply_cx(std::vector<V> &a, std::size_t control, std::size_t target) {
    std::size_t quarter = a.size() / 4;
    std::size_t bc = std::size_t{1} << control;
    std::size_t bt = std::size_t{1} << target;
    std::size_t lo = std::min(control, target);
    std::size_t hi = std::max(control, target);
    for (std::size_t k = 0; k < quarter; k++) {
        std::size_t x = spread2(k, lo, hi) | bc;
        std::swap(a[x], a[x | bt]);
    }
}

std::vector<Amplitude> axis_rotation(double phi, double half_angle) {
    // exp(-i half_angle (cos phi X + sin phi Y))
    double c = std::cos(half_angle);
    double s = std::sin(half_angle);
    Amplitude e_minus = std::polar(1.0, -phi);
    Amplitude e_plus = std::polar(1.0, phi);
    return {c, -kI * s * e_minus, -kI * s * e_plus, c};
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    check_width(n);
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Amplitude &v : amps_) {
        total += std::norm(v);
    }
    return std::sqrt(total);
}

StateVector zero_state(std::size_t n) {
    return StateVector(n);
}

StateVector basis_state(std::size_t n, Bitstring x) {
    StateVector s(n);
    if ((x >> n) != 0) {
        throw std::invalid_argument("basis label has bits beyond width");
    }
    s.amplitudes()[0] = 0.0;
    s.amplitudes()[x] = 1.0;
    return s;
}

StateVector uniform_state(std::size_t n) {
    StateVector s(n);
    double v = std::pow(2.0, -0.5 * static_cast<double>(n));
    std::fill(s.amplitudes().begin(), s.amplitudes().end(), Amplitude{v, 0.0});
    return s;
}

std::vector<Amplitude> gate_matrix(const Gate &g) {
    double t = g.params[0];
    double c = std::cos(0.5 * t);
    double s = std::sin(0.5 * t);
    double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::kH:
            return {r, r, r, -r};
        case GateKind::kRX:
            return {c, -kI * s, -kI * s, c};
        case GateKind::kRY:
            return {c, -s, s, c};
        case GateKind::kRZ:
            return {std::polar(1.0, -0.5 * t), 0.0, 0.0, std::polar(1.0, 0.5 * t)};
        case GateKind::kGPI:
            return axis_rotation(g.params[0], 0.5 * pi);
        case GateKind::kGPI2:
            return axis_rotation(g.params[0], 0.25 * pi);
        default:
            break;
    }
    // Two-qubit gates: build from their action on the 4 local basis states.
    std::vector<Amplitude> u(16, 0.0);
    for (std::size_t col = 0; col < 4; col++) {
        std::vector<Amplitude> v(4, 0.0);
        v[col] = 1.0;
        switch (g.kind) {
            case GateKind::kRZZ:
                apply_pauli_pair(v, 0, 'Z', 1, 'Z', t);
                break;
            case GateKind::kRYZ:
                apply_pauli_pair(v, 0, 'Y', 1, 'Z', t);
                break;
            case GateKind::kRZY:
                apply_pauli_pair(v, 0, 'Z', 1, 'Y', t);
                break;
            case GateKind::kRYY:
                apply_pauli_pair(v, 0, 'Y', 1, 'Y', t);
                break;
            case GateKind::kCX:
                apply_cx(v, 0, 1);
                break;
            case GateKind::kMS: {
                // exp(-i theta/2 A (x) B) with A, B traceless unit axes.
                double th = g.params[2];
                Amplitude a01 = std::polar(1.0, -g.params[0]);
                Amplitude a10 = std::polar(1.0, g.params[0]);
                Amplitude b01 = std::polar(1.0, -g.params[1]);
                Amplitude b10 = std::polar(1.0, g.params[1]);
                // (A (x) B) v, local index bit0 -> qubit a, bit1 -> qubit b
                std::vector<Amplitude> w(4, 0.0);
                for (std::size_t x = 0; x < 4; x++) {
                    std::size_t y = x ^ 3;
                    Amplitude fa = (x & 1) ? a01 : a10;  // A|bit> = coeff |1-bit>
                    Amplitude fb = (x & 2) ? b01 : b10;
                    w[y] += fa * fb * v[x];
                }
                double cc = std::cos(0.5 * th);
                double ss = std::sin(0.5 * th);
                for (std::size_t x = 0; x < 4; x++) {
                    v[x] = cc * v[x] - kI * ss * w[x];
                }
                break;
            }
            default:
                throw std::invalid_argument("no matrix for gate " + std::string(gate_name(g.kind)));
        }
        for (std::size_t row = 0; row < 4; row++) {
            u[4 * row + col] = v[row];
        }
    }
    return u;
}

void apply_gate(StateVector &s, const Gate &g) {
    std::vector<Amplitude> &a = s.amplitudes();
    std::size_t n = s.width();
    std::size_t q0 = g.qubits[0];
    std::size_t q1 = g.qubits[1];
    if (q0 >= n || (g.arity() == 2 && (q1 >= n || q0 == q1))) {
        throw std::invalid_argument("gate qubits do not fit the state");
    }
    double t = g.params[0];
    switch (g.kind) {
        case GateKind::kRX:
            apply_pauli_pair(a, q0, 'X', 0, 'I', t);
            return;
        case GateKind::kRY:
            apply_pauli_pair(a, q0, 'Y', 0, 'I', t);
            return;
        case GateKind::kRZ:
            apply_pauli_pair(a, q0, 'Z', 0, 'I', t);
            return;
        case GateKind::kRZZ:
            apply_pauli_pair(a, q0, 'Z', q1, 'Z', t);
            return;
        case GateKind::kRYZ:
            apply_pauli_pair(a, q0, 'Y', q1, 'Z', t);
            return;
        case GateKind::kRZY:
            apply_pauli_pair(a, q0, 'Z', q1, 'Y', t);
            return;
        case GateKind::kRYY:
            apply_pauli_pair(a, q0, 'Y', q1, 'Y', t);
            return;
        case GateKind::kCX:
            apply_cx(a, q0, q1);
            return;
        case GateKind::kH:
        case GateKind::kGPI:
        case GateKind::kGPI2: {
            std::vector<Amplitude> u = gate_matrix(g);
            apply_1q(a, q0, u.data());
            return;
        }
        case GateKind::kMS: {
            std::vector<Amplitude> u = gate_matrix(g);
            apply_2q(a, q0, q1, u.data());
            return;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

void run_in_place(const Circuit &c, StateVector &s) {
    if (c.width() != s.width()) {
        throw std::invalid_argument("circuit width " + std::to_string(c.width()) + " != state width " +
                                    std::to_string(s.width()));
    }
    for (const Gate &g : c.gates()) {
        apply_gate(s, g);
    }
}

StateVector run(const Circuit &c, StateVector s) {
    run_in_place(c, s);
    return s;
}

StateVector run(const Circuit &c) {
    StateVector s(c.width());
    run_in_place(c, s);
    return s;
}

bool is_real_circuit(const Circuit &c) {
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
            case GateKind::kH:
            case GateKind::kRY:
            case GateKind::kRYZ:
            case GateKind::kRZY:
            case GateKind::kCX:
                break;
            default:
                return false;
        }
    }
    return true;
}

std::vector<double> run_real(const Circuit &c) {
    if (!is_real_circuit(c)) {
        throw std::invalid_argument("circuit has gates outside H, RY, RYZ, RZY, CX");
    }
    check_width(c.width());
    std::vector<double> a(std::size_t{1} << c.width(), 0.0);
    a[0] = 1.0;
    double r = 1.0 / std::sqrt(2.0);
    for (const Gate &g : c.gates()) {
        std::size_t q0 = g.qubits[0];
        std::size_t q1 = g.qubits[1];
        double t = g.params[0];
        switch (g.kind) {
            case GateKind::kH: {
                std::size_t bit = std::size_t{1} << q0;
                for (std::size_t k = 0; k < a.size() / 2; k++) {
                    std::size_t x0 = spread(k, q0);
                    double v0 = a[x0];
                    double v1 = a[x0 | bit];
                    a[x0] = r * (v0 + v1);
                    a[x0 | bit] = r * (v0 - v1);
                }
                break;
            }
            case GateKind::kRY:
                apply_pauli_pair(a, q0, 'Y', 0, 'I', t);
                break;
            case GateKind::kRYZ:
                apply_pauli_pair(a, q0, 'Y', q1, 'Z', t);
                break;
            case GateKind::kRZY:
                apply_pauli_pair(a, q0, 'Z', q1, 'Y', t);
                break;
            default:
                apply_cx(a, q0, q1);
                break;
        }
    }
    return a;
}

double real_expectation(std::span<const double> amplitudes, std::span<const double> energies) {
    if (amplitudes.size() != energies.size()) {
        throw std::invalid_argument("energy table does not match state dimension");
    }
    double e = 0.0;
    for (std::size_t x = 0; x < energies.size(); x++) {
        e += amplitudes[x] * amplitudes[x] * energies[x];
    }
    return e;
}

std::vector<double> probability_vector(const StateVector &s) {
    std::vector<double> p(s.dimension());
    for (std::size_t x = 0; x < p.size(); x++) {
        p[x] = std::norm(s[x]);
    }
    return p;
}

OutcomeDistribution probabilities(const StateVector &s) {
    std::vector<double> p = probability_vector(s);
    double mass = 0.0;
    for (double v : p) {
        mass += v;
    }
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::domain_error("state norm drifted: mass " + std::to_string(mass));
    }
    return OutcomeDistribution::from_probabilities(s.width(), p);
}

OutcomeDistribution sample(const StateVector &s, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    std::vector<double> cdf = probability_vector(s);
    for (std::size_t x = 1; x < cdf.size(); x++) {
        cdf[x] += cdf[x - 1];
    }
    double total = cdf.back();
    Rng rng(seed);
    std::vector<std::uint64_t> counts(cdf.size(), 0);
    for (std::uint64_t k = 0; k < shots; k++) {
        double u = rng.uniform() * total;
        std::size_t x = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        counts[std::min(x, cdf.size() - 1)]++;
    }
    std::vector<std::pair<Bitstring, std::uint64_t>> entries;
    for (std::size_t x = 0; x < counts.size(); x++) {
        if (counts[x] != 0) {
            entries.emplace_back(x, counts[x]);
        }
    }
    return OutcomeDistribution::from_counts(s.width(), std::move(entries), shots);
}

double expectation(const StateVector &s, std::span<const double> energies) {
    if (energies.size() != s.dimension()) {
        throw std::invalid_argument("energy table does not match state dimension");
    }
    double e = 0.0;
    for (std::size_t x = 0; x < energies.size(); x++) {
        e += std::norm(s[x]) * energies[x];
    }
    return e;
}

double expectation(const StateVector &s, const IsingModel &m) {
    if (m.n != s.width()) {
        throw std::invalid_argument("model width " + std::to_string(m.n) + " != state width " +
                                    std::to_string(s.width()));
    }
    std::vector<double> e = diagonal_energies(m);
    return expectation(s, e);
}

}  // namespace dcqo
