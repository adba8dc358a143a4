#pragma once

#include <cstdint>
#include <random>

namespace qts {

/// Seedable deterministic random stream. Every stochastic operation in the
/// library takes one explicitly; there is no global generator.
///
/// Uniform doubles are built from the top 53 bits of a 64-bit Mersenne
/// Twister draw, so a given seed yields the same sequence on every platform.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() { return _engine(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return next(); }

private:
    std::mt19937_64 _engine;
};

/// Seed for run `index` of an experiment with master seed `master`
/// (splitmix64 finalizer over the pair).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qts
