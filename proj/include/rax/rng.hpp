#pragma once

#include <cstdint>
#include <random>

namespace rax {

// Seed-deterministic RNG. mt19937_64 has a standard-specified output
// sequence; the bounded draw below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined, so identical seeds yield
// identical draws on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased draw from {0, ..., n-1}. n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t v = engine_();
            if (v >= threshold) return v % n;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rax
