#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace wes {

/// Seedable uniform generator. Same seed gives the same sequence on every
/// platform: mt19937_64 is fully specified by the standard and the [0,1)
/// conversion below avoids std::uniform_real_distribution, which is not.
///
/// Nearby seeds (base, base+1, ...) are decorrelated by a splitmix64 step
/// before seeding the engine, so repetition r of an experiment can simply
/// use base_seed + r.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // mask rejection keeps the draw unbiased
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound | 1);
        std::uint64_t x;
        do {
            x = next_u64() & mask;
        } while (x >= bound);
        return x;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace wes
