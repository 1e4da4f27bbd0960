// Copyright 2026 The qsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seeded random source with a platform-independent output sequence.
 *
 * std::mt19937_64 is fully specified by the standard, but the standard
 * distributions are not, so uniform variates are derived here directly from
 * the raw 64-bit engine output:
 *   - uniform(): top 53 bits scaled by 2^-53, in [0, 1).
 *   - below(n): rejection sampling on the raw output, unbiased.
 *   - stream seeds: splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15).
 */
#pragma once

#include <cstdint>
#include <random>

namespace qsim {

/// One round of the splitmix64 finalizer.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the independent sub-stream `stream` of a run seeded with `seed`.
[[nodiscard]] constexpr std::uint64_t
derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] std::uint64_t next() { return engine_(); }

    [[nodiscard]] double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    [[nodiscard]] std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return draw % bound;
    }

    [[nodiscard]] bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

} // namespace qsim
