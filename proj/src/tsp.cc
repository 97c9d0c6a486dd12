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
#include <cmath>
#include <stdexcept>

#include "dcqo/files.h"
#include "dcqo/problems.h"
#include "json.hpp"

namespace dcqo {

double default_tsp_penalty(std::size_t n, const std::vector<double> &d) {
    double dmax = 0.0;
    for (double v : d) {
        dmax = std::max(dmax, v);
    }
    return dmax > 0.0 ? static_cast<double>(n) * dmax : 1.0;
}

TspInstance TspInstance::make(std::size_t n, std::vector<double> d, double penalty) {
    if (n < 2) {
        throw std::invalid_argument("TSP needs at least 2 cities");
    }
    if (n > 8) {
        throw std::invalid_argument("TSP with " + std::to_string(n) + " cities needs more than 64 qubits");
    }
    if (d.size() != n * n) {
        throw std::invalid_argument("distance matrix must be n x n");
    }
    for (std::size_t a = 0; a < n; a++) {
        if (d[a * n + a] != 0.0) {
            throw std::invalid_argument("distance from a city to itself must be 0");
        }
        for (std::size_t b = 0; b < n; b++) {
            double v = d[a * n + b];
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("distances must be finite and nonnegative");
            }
            if (std::abs(v - d[b * n + a]) > 1e-12 * std::max(1.0, std::abs(v))) {
                throw std::invalid_argument("distance matrix must be symmetric");
            }
        }
    }
    if (!std::isfinite(penalty) || penalty < 0.0) {
        throw std::invalid_argument("penalty must be positive");
    }
    TspInstance t;
    t.n = n;
    t.penalty = penalty > 0.0 ? penalty : default_tsp_penalty(n, d);
    t.d = std::move(d);
    for (std::size_t c = 0; c < n; c++) {
        t.cities.push_back(std::to_string(c));
    }
    return t;
}

QuboProblem tsp_to_qubo(const TspInstance &t) {
    std::size_t n = t.n;
    std::size_t nq = n * n;
    double a = t.penalty;
    std::vector<double> q(nq * nq, 0.0);
    auto add_pair = [&](std::size_t u, std::size_t v, double coef) {
        // coef multiplies x_u x_v in the cost; Q_uv = Q_vu = coef / 2.
        q[u * nq + v] += 0.5 * coef;
        q[v * nq + u] += 0.5 * coef;
    };
    for (std::size_t u = 0; u < nq; u++) {
        q[u * nq + u] = -2.0 * a;
    }
    for (std::size_t s = 0; s < n; s++) {
        for (std::size_t c1 = 0; c1 < n; c1++) {
            for (std::size_t c2 = c1 + 1; c2 < n; c2++) {
                add_pair(tsp_variable(s, c1, n), tsp_variable(s, c2, n), 2.0 * a);
                add_pair(tsp_variable(c1, s, n), tsp_variable(c2, s, n), 2.0 * a);
            }
        }
    }
    for (std::size_t step = 0; step < n; step++) {
        std::size_t next = (step + 1) % n;
        for (std::size_t c1 = 0; c1 < n; c1++) {
            for (std::size_t c2 = 0; c2 < n; c2++) {
                if (c1 != c2 && t.distance(c1, c2) != 0.0) {
                    add_pair(tsp_variable(step, c1, n), tsp_variable(next, c2, n), t.distance(c1, c2));
                }
            }
        }
    }
    QuboProblem out = QuboProblem::from_matrix(nq, std::move(q), 2.0 * static_cast<double>(n) * a);
    out.name = "tsp" + std::to_string(n);
    return out;
}

TspDecoding decode_tsp(Bitstring x, std::size_t n) {
    if (n < 1 || n * n > 64) {
        throw std::invalid_argument("unsupported TSP size");
    }
    if (n * n < 64 && (x >> (n * n)) != 0) {
        throw std::invalid_argument("bitstring longer than n^2");
    }
    TspDecoding out;
    Path p;
    for (std::size_t t = 0; t < n; t++) {
        std::size_t count = 0;
        std::size_t city = 0;
        for (std::size_t c = 0; c < n; c++) {
            if (bit_at(x, tsp_variable(t, c, n))) {
                count++;
                city = c;
            }
        }
        if (count != 1) {
            out.violation = "time step " + std::to_string(t) + " has " + std::to_string(count) + " cities";
            return out;
        }
        p.cities.push_back(city);
    }
    for (std::size_t c = 0; c < n; c++) {
        std::size_t count = 0;
        for (std::size_t t = 0; t < n; t++) {
            count += bit_at(x, tsp_variable(t, c, n)) ? 1 : 0;
        }
        if (count != 1) {
            out.violation = "city " + std::to_string(c) + " is visited " + std::to_string(count) + " times";
            return out;
        }
    }
    out.path = std::move(p);
    return out;
}

TspDecoding decode_tsp(std::string_view bits, std::size_t n) {
    std::size_t width = 0;
    Bitstring x = parse_bits(bits, &width);
    if (width != n * n) {
        throw std::invalid_argument("TSP bitstring has " + std::to_string(width) + " bits, expected " +
                                    std::to_string(n * n));
    }
    return decode_tsp(x, n);
}

TspDecoding decode_tsp(Bitstring x, const TspInstance &t) {
    TspDecoding out = decode_tsp(x, t.n);
    if (out.path) {
        out.path->length = tour_length(t, out.path->cities);
    }
    return out;
}

double tour_length(const TspInstance &t, const std::vector<std::size_t> &cities) {
    if (cities.size() != t.n) {
        throw std::invalid_argument("tour must visit every city once");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < cities.size(); k++) {
        total += t.distance(cities[k], cities[(k + 1) % cities.size()]);
    }
    return total;
}

Bitstring encode_tour(const std::vector<std::size_t> &cities) {
    std::size_t n = cities.size();
    Bitstring x = 0;
    for (std::size_t t = 0; t < n; t++) {
        if (cities[t] >= n) {
            throw std::invalid_argument("city index out of range");
        }
        x |= Bitstring{1} << tsp_variable(t, cities[t], n);
    }
    return x;
}

TspInstance parse_tsp_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("TSP JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("TSP JSON must be an object");
    }
    std::vector<double> d;
    std::size_t n = 0;
    try {
        if (j.contains("distances")) {
            auto rows = j.at("distances").get<std::vector<std::vector<double>>>();
            n = rows.size();
            for (const auto &row : rows) {
                if (row.size() != n) {
                    throw std::invalid_argument("TSP JSON: distance matrix is not square");
                }
                d.insert(d.end(), row.begin(), row.end());
            }
        } else if (j.contains("coordinates")) {
            auto pts = j.at("coordinates").get<std::vector<std::vector<double>>>();
            n = pts.size();
            d.assign(n * n, 0.0);
            for (std::size_t a = 0; a < n; a++) {
                for (std::size_t b = 0; b < n; b++) {
                    if (pts[a].size() != pts[b].size() || pts[a].empty()) {
                        throw std::invalid_argument("TSP JSON: coordinates must share a dimension");
                    }
                    double s = 0.0;
                    for (std::size_t k = 0; k < pts[a].size(); k++) {
                        s += (pts[a][k] - pts[b][k]) * (pts[a][k] - pts[b][k]);
                    }
                    d[a * n + b] = std::sqrt(s);
                }
            }
        } else {
            throw std::invalid_argument("TSP JSON needs 'distances' or 'coordinates'");
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("TSP JSON: ") + e.what());
    }
    double penalty = j.value("penalty", 0.0);
    TspInstance t = TspInstance::make(n, std::move(d), penalty);
    if (j.contains("cities")) {
        auto names = j.at("cities").get<std::vector<std::string>>();
        if (names.size() != n) {
            throw std::invalid_argument("TSP JSON: city names do not match the distance matrix");
        }
        t.cities = std::move(names);
    }
    return t;
}

TspInstance load_tsp_json(const std::string &path) {
    return parse_tsp_json(read_file(path));
}

}  // namespace dcqo
