#pragma once

#include <cstdint>

namespace crp {

/// splitmix64: tiny, fast, reproducible across platforms. Used for all
/// seeded randomness so that instances and simulations are byte-stable.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound > 0.
    uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

    int64_t next_range(int64_t lo, int64_t hi) {  // inclusive
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next_u64() & 1) != 0; }

private:
    uint64_t state_;
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    Rng r(a ^ (0x632be59bd9b4e019ULL + b * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
}

}  // namespace crp
