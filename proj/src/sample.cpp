#include "corank/sample.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "corank/errors.hpp"

namespace corank {

std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 gen(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
    return gen.next();
}

RootVector sample_distinct_roots(std::size_t n, std::uint64_t seed, std::uint64_t bound) {
    if (n < 1) throw ArgumentError("sample: need at least one root");
    if (bound < n) {
        throw ArgumentError("sample: bound " + std::to_string(bound) +
                            " too small for " + std::to_string(n) + " distinct roots");
    }
    SplitMix64 gen(seed);
    std::vector<Rational> values;
    values.reserve(n);
    // Rejection keeps equality exact: 1/2 and 2/4 are the same rational.
    const std::uint64_t max_draws = 10000 * n;
    std::uint64_t draws = 0;
    while (values.size() < n) {
        if (++draws > max_draws) {
            throw ArgumentError("sample: could not reach distinctness within retry budget");
        }
        const std::uint64_t span = 2 * bound + 1;
        const long num = static_cast<long>(gen.next() % span) - static_cast<long>(bound);
        const long den = static_cast<long>(1 + gen.next() % bound);
        Rational candidate(num, den);
        if (std::find(values.begin(), values.end(), candidate) == values.end()) {
            values.push_back(std::move(candidate));
        }
    }
    return RootVector(std::move(values));
}

}  // namespace corank
