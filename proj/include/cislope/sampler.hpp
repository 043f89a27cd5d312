#pragma once

#include <cstdint>

namespace cislope {

// Tiny deterministic generator (splitmix64) for spreading check points over
// parameter grids. Not for cryptography or statistics; chosen so the verify
// subcommand and the test suite sample identical configurations on every
// platform and every run.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; spread is fine for grid sampling.
    long in_range(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace cislope
