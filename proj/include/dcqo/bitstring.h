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

#ifndef DCQO_BITSTRING_H
#define DCQO_BITSTRING_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace dcqo {

/// A computational-basis label. Bit k carries variable (qubit) k, so qubit 0
/// is the least significant bit of a statevector index. Every formatter in
/// the library prints qubit 0 as the leftmost character.
using Bitstring = std::uint64_t;

inline bool bit_at(Bitstring x, std::size_t k) {
    return ((x >> k) & 1U) != 0;
}

/// Spin image of bit k under x = (1 - z) / 2, i.e. 0 -> +1 and 1 -> -1.
inline int spin_at(Bitstring x, std::size_t k) {
    return bit_at(x, k) ? -1 : 1;
}

std::string format_bits(Bitstring x, std::size_t width);

/// Parses a '0'/'1' string with qubit 0 first. Whitespace and '_' are
/// skipped, so "1000 0010 0100 0001" is accepted. Writes the digit count to
/// `width` when non-null.
Bitstring parse_bits(std::string_view text, std::size_t *width = nullptr);

/// Seeded generator. Raw output comes from std::mt19937_64 (fully specified
/// by the standard); floating-point draws are built by hand so results do not
/// depend on the standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (seed, stream); gives independent per-restart
/// or per-instance seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace dcqo

#endif
