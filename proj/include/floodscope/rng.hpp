#ifndef FLOODSCOPE_RNG_HPP
#define FLOODSCOPE_RNG_HPP

#include <cstdint>

namespace floodscope {

/// SplitMix64 finalizer; also used to expand seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Stable substream derivation: stream k of a base seed. Used for per-tree,
/// per-class and per-scene streams so parallel order never matters.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0xD1342543DE82EF95ull * (index + 1));
    return splitmix64(s);
}

/// xoshiro256** seeded via SplitMix64. Portable: all outputs are exact
/// 64-bit integer sequences, identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
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

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n >= 1. Fixed-point multiply keeps the
    /// mapping identical everywhere.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller (cosine branch; one variate per call).
    double next_normal();

    /// Normal(mu, sigma) resampled until it lands in [lo, hi].
    double next_truncated_normal(double mu, double sigma, double lo, double hi);

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace floodscope

#endif
