#pragma once

#include <cstdint>

namespace regshake {

// Finalizer from splitmix64 (Vigna). Statistically strong 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ by Blackman and Vigna. Fixed, portable: the output stream
// depends on the seed only, never on platform or standard library.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        // seed expansion through the splitmix64 sequence, as the authors recommend
        for (auto& word : s_) {
            seed += 0x9e3779b97f4a7c15ULL;
            word = mix64(seed);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1) with the full 53 bits of double precision
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Per-trial seed stream. Chained mixing keeps streams for distinct
// (seed, n, trial) triples decoupled, so extending a run with new n values
// never perturbs the trials already computed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (n + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (trial + 0x9e3779b97f4a7c15ULL));
    return h;
}

} // namespace regshake
