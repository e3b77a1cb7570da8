#pragma once

#include <cmath>
#include <cstdint>

namespace switchflow {

/// Counter-based random stream: output k is a bijective 64-bit mix of
/// state0 + k * gamma, with state0 derived from (seed, stream). Streams are
/// independent of scheduling and thread count; the same (seed, stream) pair
/// always yields the same sequence.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential waiting time with the given rate (> 0).
    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_ = 0;
};

}  // namespace switchflow
