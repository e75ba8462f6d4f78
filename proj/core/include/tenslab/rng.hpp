#pragma once

#include <cstdint>

namespace tenslab {

// Deterministic across platforms, unlike <random> distributions.
// Every randomized routine in the library derives its stream from a seed
// so results are reproducible bit-for-bit.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    double uniform_real() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed);
        r.state ^= 0xd2b74407b1ce6e93ULL * (stream + 1);
        r.next();
        return r;
    }
};

}  // namespace tenslab
