#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace fsmsynth {

// Single explicit random source. All GA randomness flows through one Rng so
// a run is a pure function of its 64-bit seed; draws avoid
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    uint32_t bit() { return static_cast<uint32_t>(gen_() & 1u); }

    // Uniform on [0, n), unbiased via power-of-two masking with rejection.
    uint32_t index(uint32_t n) {
        if (n <= 1) return 0;
        const uint64_t mask = std::bit_ceil(static_cast<uint64_t>(n)) - 1;
        for (;;) {
            const uint64_t v = gen_() & mask;
            if (v < n) return static_cast<uint32_t>(v);
        }
    }

    // Uniform on [0, 1) with 53 significant bits.
    double real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace fsmsynth
