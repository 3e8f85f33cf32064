/*
   Copyright 2026 The falseclaim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace falseclaim {

/// SplitMix64 output function; used to hash seeds and stream indices.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based generator (Philox4x32-10).
///
/// The output is a pure function of (seed, stream, position): the seed is the
/// Philox key, the stream index fills the upper half of the 128-bit counter.
/// Two generators with the same (seed, stream) produce the same sequence, and
/// child(i) gives a generator fully determined by (seed, stream, i). Values
/// are meant to be owned by one task and never shared between threads.
///
/// Satisfies std::uniform_random_bit_generator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    /// Independent generator for sub-task `index` of this one.
    Rng child(std::uint64_t index) const noexcept {
        return Rng(seed_, mix64(stream_ ^ mix64(index + 0x632BE59BD9B4E019ULL)));
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        if (buffered_ == 0) {
            refill();
            buffered_ = 2;
        }
        return block_[--buffered_];
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in the open interval (0, 1).
    double uniform_open() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 2> block_{};
    int buffered_ = 0;
};

/// The raw Philox4x32-10 bijection, exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

}  // namespace falseclaim
