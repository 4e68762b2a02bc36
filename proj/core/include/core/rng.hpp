#ifndef CORE_RNG_HPP
#define CORE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace core {

// splitmix64: small, fast, well-mixed 64-bit generator used both as a PRNG
// and as a hash for deriving independent per-vertex / per-round streams.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable combination of two 64-bit values (seed, stream-id).
inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Deterministic counter-based stream: value i of stream `seed`.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(splitmix64(seed)) {}
    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    // uniform in [0,1)
    double next_double() {
        return (next_u64() >> 11) * 0x1.0p-53;
    }
    // uniform integer in [0, bound) without modulo bias (rejection)
    uint64_t next_below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t threshold = (~uint64_t{0} - bound + 1) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }
    // Exponential with mean `mean` via inverse CDF -mean*ln(1-u).
    double next_exponential(double mean) {
        double u = next_double();
        return -mean * std::log1p(-u);
    }

private:
    uint64_t state_;
};

} // namespace core

#endif
