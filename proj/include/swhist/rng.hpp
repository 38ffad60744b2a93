#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace swhist {

/**
 * Seeded random source with a fixed cross-platform mapping from raw engine
 * output to bounded integers. std::uniform_int_distribution is
 * implementation-defined, which would break byte-identical stream generation
 * across standard libraries, so the bounded draw is done here by rejection.
 */
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return engine_(); // full 64-bit range
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + x % span;
    }

    /// Uniform double in [0, 1).
    double uniform01() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(0, i - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace swhist
