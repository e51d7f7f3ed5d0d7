#pragma once

#include <cstdint>

namespace polycomp {

// Deterministic SplitMix64 stream. The sequence is fixed by the arithmetic
// alone (no library distributions), so seeded runs reproduce across
// compilers and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    // uniform in [0, n), n > 0
    std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }
    int next_bit() { return static_cast<int>(next_u64() >> 63); }

private:
    std::uint64_t state_;
};

}  // namespace polycomp
