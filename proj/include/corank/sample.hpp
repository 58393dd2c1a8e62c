#pragma once

#include <cstdint>

#include "corank/rational.hpp"

namespace corank {

/// SplitMix64: platform-stable 64-bit mixing generator. Chosen for
/// reproducibility of seeded runs across machines; all arithmetic is on
/// unsigned 64-bit values with wraparound.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Stable per-trial sub-seed so trials are independent of execution order.
std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index);

/// n pairwise-distinct rationals with numerators in [-bound, bound] and
/// denominators in [1, bound]; a pure function of (n, seed, bound).
/// Requires bound >= n so distinctness is achievable.
RootVector sample_distinct_roots(std::size_t n, std::uint64_t seed, std::uint64_t bound);

/// Bound used by the seeded harnesses; small enough to keep bignum growth
/// mild, large enough that rejection is rare at desk scale.
inline constexpr std::uint64_t kHarnessSampleBound = 100;

}  // namespace corank
