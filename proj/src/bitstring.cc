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

#include "dcqo/bitstring.h"

#include <stdexcept>

namespace dcqo {

std::string format_bits(Bitstring x, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t k = 0; k < width; k++) {
        if (bit_at(x, k)) {
            out[k] = '1';
        }
    }
    return out;
}

Bitstring parse_bits(std::string_view text, std::size_t *width) {
    Bitstring x = 0;
    std::size_t k = 0;
    for (char c : text) {
        if (c == ' ' || c == '_' || c == '\t') {
            continue;
        }
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring contains '" + std::string(1, c) + "'");
        }
        if (k >= 64) {
            throw std::invalid_argument("bitstring longer than 64 bits");
        }
        if (c == '1') {
            x |= Bitstring{1} << k;
        }
        k++;
    }
    if (width != nullptr) {
        *width = k;
    }
    return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace dcqo
