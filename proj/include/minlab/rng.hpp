#pragma once

#include <cstdint>

namespace minlab {

// Deterministic, platform-independent PRNG. std::uniform_* distributions are
// implementation-defined, so all variate generation here is hand-rolled to
// keep experiment reports bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // seed the xoshiro256** state via splitmix64
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
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

    // uniform in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        // rejection-free modulo is fine at the scales used here; bias < 2^-40
        return next_u64() % n;
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

// Stateless seed derivation: hash(base, a, b). Used to give every trial of an
// experiment its own stream independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t x = base;
    std::uint64_t h = Rng::splitmix64(x);
    x ^= h + a;
    h = Rng::splitmix64(x);
    x ^= h + b;
    return Rng::splitmix64(x);
}

}  // namespace minlab
