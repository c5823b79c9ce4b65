#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace homind {

/// splitmix64 step; used to expand seeds and derive per-trial streams.
inline std::uint64_t splitmix64(std::uint64_t & state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded through splitmix64. Satisfies UniformRandomBitGenerator,
/// so it plugs into <random> distributions, but the library only relies on
/// next() and below() whose outputs are fixed across platforms.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed)
    {
        std::uint64_t sm = seed;
        for (auto & word : state_)
            word = splitmix64(sm);
    }

    /// Independent stream for trial `index` of a run seeded with `master`.
    static Rng stream(std::uint64_t master, std::uint64_t index)
    {
        std::uint64_t sm = master ^ (index * 0xd1342543de82ef95ULL);
        return Rng(splitmix64(sm));
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool coin(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

    result_type operator()() { return next(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace homind
