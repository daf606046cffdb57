#pragma once

#include <cmath>
#include <cstdint>

namespace maxbound {

/// Counter-based random stream: the i-th draw is a pure function of
/// (seed, i), so sweeps can be split across workers in blocks without
/// changing the sampled values or their order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Stream for block `b`, statistically independent of other blocks.
    CounterRng block(std::uint64_t b) const {
        return CounterRng(mix(seed_ ^ mix(b + 0x9e3779b97f4a7c15ull)));
    }

    std::uint64_t bits(std::uint64_t i) const {
        return mix(seed_ + (i + 1) * 0x9e3779b97f4a7c15ull);
    }

    /// Uniform on [0, 1) from 53 bits of counter i.
    double uniform(std::uint64_t i) const {
        return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1] (safe as a log argument).
    double uniform_pos(std::uint64_t i) const {
        return (static_cast<double>(bits(i) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on counters (2i, 2i+1).
    double normal(std::uint64_t i) const {
        double u = uniform_pos(2 * i);
        double v = uniform(2 * i + 1);
        return std::sqrt(-2.0 * std::log(u)) *
               std::cos(6.283185307179586476925287 * v);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
};

} // namespace maxbound
