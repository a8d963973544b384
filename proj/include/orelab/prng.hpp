#pragma once

#include <cstdint>

namespace orelab {

/// Deterministic 64-bit generator (splitmix64). The sample sequence for a
/// given seed is part of the report contract, so this stays hand-rolled
/// rather than delegating to std distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

    /// Uniform value in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Independent child stream; deterministic function of the current state.
    SplitMix64 split() { return SplitMix64(next() ^ 0x3c79ac492ba7b653ULL); }

    /// Deterministic per-slot derivation (used to seed one stream per scenario).
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t slot) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (slot + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace orelab
