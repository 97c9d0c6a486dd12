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


#include "dcqo/ising.h"

#include "dcqo/files.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace dcqo {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

double degeneracy_tolerance(double e) {
    return 1e-9 * std::max(1.0, std::abs(e));
}

}  // namespace

QuboProblem QuboProblem::from_matrix(std::size_t n, std::vector<double> q, double offset) {
    if (n == 0) {
        throw std::invalid_argument("QUBO needs at least one variable");
    }
    if (q.size() != n * n) {
        throw std::invalid_argument("QUBO matrix has " + std::to_string(q.size()) + " entries, expected " +
                                    std::to_string(n * n));
    }
    double scale = 1.0;
    for (double v : q) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("QUBO matrix has a non-finite entry");
        }
        scale = std::max(scale, std::abs(v));
    }
    if (!std::isfinite(offset)) {
        throw std::invalid_argument("QUBO offset is not finite");
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            double a = q[i * n + j];
            double b = q[j * n + i];
            if (std::abs(a - b) > kSymmetryTolerance * scale) {
                throw std::invalid_argument("QUBO matrix is not symmetric at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
            }
            double avg = 0.5 * (a + b);
            q[i * n + j] = avg;
            q[j * n + i] = avg;
        }
    }
    QuboProblem out;
    out.n = n;
    out.q = std::move(q);
    out.offset = offset;
    return out;
}

double QuboProblem::evaluate(Bitstring x) const {
    double total = offset;
    for (std::size_t i = 0; i < n; i++) {
        if (!bit_at(x, i)) {
            continue;
        }
        total += q[i * n + i];
        for (std::size_t j = i + 1; j < n; j++) {
            if (bit_at(x, j)) {
                total += 2.0 * q[i * n + j];
            }
        }
    }
    return total;
}

double QuboProblem::evaluate(std::span<const std::uint8_t> x) const {
    if (x.size() != n) {
        throw std::invalid_argument("assignment length " + std::to_string(x.size()) + " != " + std::to_string(n));
    }
    double total = offset;
    for (std::size_t i = 0; i < n; i++) {
        if (!x[i]) {
            continue;
        }
        total += q[i * n + i];
        for (std::size_t j = i + 1; j < n; j++) {
            if (x[j]) {
                total += 2.0 * q[i * n + j];
            }
        }
    }
    return total;
}

QuboProblem parse_qubo_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<double> q;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("QUBO text line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        fields.clear();
        fields.str(line);
        if (!have_n) {
            long long value = 0;
            std::string rest;
            if (!(fields >> value) || (fields >> rest) || value < 1) {
                fail("expected a positive variable count");
            }
            n = static_cast<std::size_t>(value);
            q.assign(n * n, 0.0);
            have_n = true;
            continue;
        }
        long long i = 0;
        long long j = 0;
        double v = 0;
        std::string rest;
        if (!(fields >> i >> j >> v) || (fields >> rest)) {
            fail("expected 'i j value'");
        }
        if (i < 0 || j < 0 || static_cast<std::size_t>(j) >= n || i > j) {
            fail("indices must satisfy 0 <= i <= j < n");
        }
        if (!std::isfinite(v)) {
            fail("value is not finite");
        }
        auto key = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (!seen.insert(key).second) {
            fail("duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        q[key.first * n + key.second] = v;
        q[key.second * n + key.first] = v;
    }
    if (!have_n) {
        throw std::invalid_argument("QUBO text has no variable count");
    }
    return QuboProblem::from_matrix(n, std::move(q));
}

QuboProblem load_qubo_file(const std::string &path) {
    QuboProblem q = parse_qubo_text(read_file(path));
    q.name = path;
    return q;
}

std::string format_qubo_text(const QuboProblem &q) {
    std::ostringstream out;
    out.precision(17);
    if (!q.name.empty()) {
        out << "# " << q.name << "\n";
    }
    if (q.offset != 0.0) {
        out << "# offset " << q.offset << " (not part of the format)\n";
    }
    out << q.n << "\n";
    for (std::size_t i = 0; i < q.n; i++) {
        for (std::size_t j = i; j < q.n; j++) {
            double v = q.at(i, j);
            if (v != 0.0) {
                out << i << " " << j << " " << v << "\n";
            }
        }
    }
    return out.str();
}

IsingModel IsingModel::make(std::size_t n, std::vector<double> h, std::vector<Coupling> couplings, double offset) {
    if (n == 0) {
        throw std::invalid_argument("Ising model needs at least one spin");
    }
    if (h.size() != n) {
        throw std::invalid_argument("field vector has " + std::to_string(h.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    for (double v : h) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite field");
        }
    }
    if (!std::isfinite(offset)) {
        throw std::invalid_argument("non-finite offset");
    }
    std::vector<Coupling> kept;
    kept.reserve(couplings.size());
    for (const Coupling &c : couplings) {
        if (c.i >= c.j || c.j >= n) {
            throw std::invalid_argument("coupling (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                                        ") must satisfy i < j < n");
        }
        if (!std::isfinite(c.value)) {
            throw std::invalid_argument("non-finite coupling");
        }
        if (c.value != 0.0) {
            kept.push_back(c);
        }
    }
    std::sort(kept.begin(), kept.end(), [](const Coupling &a, const Coupling &b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    for (std::size_t k = 1; k < kept.size(); k++) {
        if (kept[k].i == kept[k - 1].i && kept[k].j == kept[k - 1].j) {
            throw std::invalid_argument("duplicate coupling (" + std::to_string(kept[k].i) + ", " +
                                        std::to_string(kept[k].j) + ")");
        }
    }
    IsingModel m;
    m.n = n;
    m.h = std::move(h);
    m.couplings = std::move(kept);
    m.offset = offset;
    return m;
}

std::vector<double> IsingModel::dense_couplings() const {
    std::vector<double> out(n * n, 0.0);
    for (const Coupling &c : couplings) {
        out[c.i * n + c.j] = c.value;
        out[c.j * n + c.i] = c.value;
    }
    return out;
}

IsingModel qubo_to_ising(const QuboProblem &q) {
    std::size_t n = q.n;
    std::vector<double> h(n, 0.0);
    std::vector<Coupling> couplings;
    double offset = q.offset;
    for (std::size_t i = 0; i < n; i++) {
        double qii = q.at(i, i);
        h[i] -= 0.5 * qii;
        offset += 0.5 * qii;
        for (std::size_t j = i + 1; j < n; j++) {
            double qij = q.at(i, j);
            if (qij == 0.0) {
                continue;
            }
            couplings.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0.5 * qij});
            h[i] -= 0.5 * qij;
            h[j] -= 0.5 * qij;
            offset += 0.5 * qij;
        }
    }
    return IsingModel::make(n, std::move(h), std::move(couplings), offset);
}

double ising_energy(const IsingModel &m, Bitstring x) {
    if (m.n < 64 && (x >> m.n) != 0) {
        throw std::invalid_argument("bitstring has bits beyond width " + std::to_string(m.n));
    }
    double e = m.offset;
    for (std::size_t i = 0; i < m.n; i++) {
        e += m.h[i] * spin_at(x, i);
    }
    for (const Coupling &c : m.couplings) {
        e += c.value * spin_at(x, c.i) * spin_at(x, c.j);
    }
    return e;
}

double ising_energy(const IsingModel &m, std::string_view bits) {
    std::size_t width = 0;
    Bitstring x = parse_bits(bits, &width);
    if (width != m.n) {
        throw std::invalid_argument("bitstring length " + std::to_string(width) + " != model width " +
                                    std::to_string(m.n));
    }
    return ising_energy(m, x);
}

std::vector<double> diagonal_energies(const IsingModel &m) {
    std::size_t n = m.n;
    if (n > 30) {
        throw std::invalid_argument("diagonal_energies: width too large");
    }
    std::size_t dim = std::size_t{1} << n;
    std::vector<double> e(dim, 0.0);
    e[0] = m.offset;
    std::vector<double> dense = m.dense_couplings();
    std::vector<double> local(dim / 2 > 0 ? dim / 2 : 1);
    // After pass k, e[x] for x < 2^(k+1) is the energy of spins 0..k alone.
    for (std::size_t k = 0; k < n; k++) {
        std::size_t half = std::size_t{1} << k;
        // local[x] = sum_{j<k} J_jk z_j(x) for x < 2^k.
        double base = 0.0;
        for (std::size_t j = 0; j < k; j++) {
            base += dense[j * n + k];
        }
        local[0] = base;
        for (std::size_t x = 1; x < half; x++) {
            std::size_t b = 63 - static_cast<std::size_t>(__builtin_clzll(x));
            local[x] = local[x ^ (std::size_t{1} << b)] - 2.0 * dense[b * n + k];
        }
        double hk = m.h[k];
        for (std::size_t x = 0; x < half; x++) {
            double up = hk + local[x];
            e[x | half] = e[x] - up;
            e[x] += up;
        }
    }
    return e;
}

bool GroundStateSet::contains(Bitstring x) const {
    return std::binary_search(bitstrings.begin(), bitstrings.end(), x);
}

GroundStateSet ground_states_from_energies(std::size_t n, std::span<const double> energies, bool with_spectrum) {
    if (energies.empty() || energies.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("energy table size does not match width");
    }
    if (with_spectrum && n > kMaxSpectrumWidth) {
        throw std::invalid_argument("spectrum is only available for n <= " + std::to_string(kMaxSpectrumWidth));
    }
    double best = *std::min_element(energies.begin(), energies.end());
    double tol = degeneracy_tolerance(best);
    GroundStateSet g;
    g.n = n;
    g.energy = best;
    for (std::size_t x = 0; x < energies.size(); x++) {
        if (energies[x] <= best + tol) {
            g.bitstrings.push_back(x);
        }
    }
    if (with_spectrum) {
        g.spectrum.assign(energies.begin(), energies.end());
        std::sort(g.spectrum.begin(), g.spectrum.end());
    }
    return g;
}

GroundStateSet brute_force_solve(const IsingModel &m, bool with_spectrum) {
    if (m.n > kMaxBruteForceWidth) {
        throw std::invalid_argument("brute_force_solve: n = " + std::to_string(m.n) + " exceeds " +
                                    std::to_string(kMaxBruteForceWidth));
    }
    std::vector<double> e = diagonal_energies(m);
    return ground_states_from_energies(m.n, e, with_spectrum);
}

OutcomeDistribution OutcomeDistribution::from_probabilities(std::size_t n, std::span<const double> dense) {
    if (n > 63 || dense.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("probability vector size does not match width");
    }
    OutcomeDistribution d;
    d.n_ = n;
    double mass = 0.0;
    for (std::size_t x = 0; x < dense.size(); x++) {
        double p = dense[x];
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("probabilities must be finite and nonnegative");
        }
        mass += p;
        if (p > 0.0) {
            d.entries_.push_back({x, p});
        }
    }
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::invalid_argument("probability mass " + std::to_string(mass) + " is not 1");
    }
    return d;
}

OutcomeDistribution OutcomeDistribution::from_entries(std::size_t n, std::vector<Outcome> entries) {
    OutcomeDistribution d;
    d.n_ = n;
    std::sort(entries.begin(), entries.end(), [](const Outcome &a, const Outcome &b) { return a.bits < b.bits; });
    double mass = 0.0;
    for (std::size_t k = 0; k < entries.size(); k++) {
        const Outcome &o = entries[k];
        if (n < 64 && (o.bits >> n) != 0) {
            throw std::invalid_argument("outcome has bits beyond width");
        }
        if (!(o.probability >= 0.0) || !std::isfinite(o.probability)) {
            throw std::invalid_argument("probabilities must be finite and nonnegative");
        }
        if (k > 0 && entries[k - 1].bits == o.bits) {
            throw std::invalid_argument("duplicate outcome");
        }
        mass += o.probability;
        if (o.probability > 0.0) {
            d.entries_.push_back(o);
        }
    }
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::invalid_argument("probability mass " + std::to_string(mass) + " is not 1");
    }
    return d;
}

OutcomeDistribution OutcomeDistribution::from_counts(std::size_t n,
                                                     std::vector<std::pair<Bitstring, std::uint64_t>> counts,
                                                     std::uint64_t shots) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    std::sort(counts.begin(), counts.end());
    OutcomeDistribution d;
    d.n_ = n;
    d.shots_ = shots;
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < counts.size(); k++) {
        if (k > 0 && counts[k - 1].first == counts[k].first) {
            throw std::invalid_argument("duplicate outcome");
        }
        if (n < 64 && (counts[k].first >> n) != 0) {
            throw std::invalid_argument("outcome has bits beyond width");
        }
        total += counts[k].second;
        if (counts[k].second > 0) {
            d.entries_.push_back(
                {counts[k].first, static_cast<double>(counts[k].second) / static_cast<double>(shots)});
        }
    }
    if (total != shots) {
        throw std::invalid_argument("counts sum to " + std::to_string(total) + ", expected " +
                                    std::to_string(shots));
    }
    d.count_total_ = total;
    return d;
}

double OutcomeDistribution::probability(Bitstring x) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Outcome &o, Bitstring b) { return o.bits < b; });
    if (it == entries_.end() || it->bits != x) {
        return 0.0;
    }
    return it->probability;
}

double OutcomeDistribution::total_mass() const {
    if (is_sampled()) {
        return static_cast<double>(count_total_) / static_cast<double>(shots_);
    }
    double mass = 0.0;
    for (const Outcome &o : entries_) {
        mass += o.probability;
    }
    return mass;
}

std::vector<Outcome> OutcomeDistribution::top(std::size_t k) const {
    std::vector<Outcome> sorted = entries_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Outcome &a, const Outcome &b) { return a.probability > b.probability; });
    if (sorted.size() > k) {
        sorted.resize(k);
    }
    return sorted;
}

Bitstring OutcomeDistribution::most_probable() const {
    if (entries_.empty()) {
        throw std::logic_error("empty distribution");
    }
    return top(1).front().bits;
}

double success_probability(const OutcomeDistribution &d, const GroundStateSet &g) {
    if (d.width() != g.n) {
        throw std::invalid_argument("distribution and ground set widths differ");
    }
    double sp = 0.0;
    for (Bitstring x : g.bitstrings) {
        sp += d.probability(x);
    }
    return std::min(1.0, sp);
}

double mean_energy(const OutcomeDistribution &d, const IsingModel &m) {
    if (d.width() != m.n) {
        throw std::invalid_argument("distribution and model widths differ");
    }
    double e = 0.0;
    for (const Outcome &o : d.entries()) {
        e += o.probability * ising_energy(m, o.bits);
    }
    return e;
}

double approximation_ratio(const OutcomeDistribution &d, const IsingModel &m, const GroundStateSet &g) {
    double mean = mean_energy(d, m);
    if (std::abs(g.energy) < 1e-12) {
        throw UndefinedMetricError("approximation ratio undefined: ground energy is zero", mean);
    }
    return mean / g.energy;
}

double approximation_ratio(const OutcomeDistribution &d, const IsingModel &m) {
    return approximation_ratio(d, m, brute_force_solve(m));
}

IsingModel random_spin_glass(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("random_spin_glass: n must be positive");
    }
    Rng rng(seed);
    std::vector<double> h(n);
    for (double &v : h) {
        v = rng.uniform(-1.0, 1.0);
    }
    std::vector<Coupling> couplings;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            double v = 0.0;
            while (v == 0.0) {
                v = rng.uniform(-1.0, 1.0);
            }
            couplings.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
        }
    }
    return IsingModel::make(n, std::move(h), std::move(couplings));
}

}  // namespace dcqo
