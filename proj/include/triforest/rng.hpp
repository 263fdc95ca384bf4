#ifndef TRIFOREST_RNG_HPP
#define TRIFOREST_RNG_HPP

#include <cstdint>
#include <random>

namespace triforest {

/// All randomness in the project flows through this type: a 64-bit
/// Mersenne Twister (std::mt19937_64, whose output sequence is fixed by
/// the C++ standard) with our own bounded-integer reduction, since the
/// standard distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0, by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// True with probability num/den.
    bool chance(int num, int den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-instance seeds.
inline constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace triforest

#endif  // TRIFOREST_RNG_HPP
