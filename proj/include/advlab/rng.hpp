#ifndef ADVLAB_RNG_HPP
#define ADVLAB_RNG_HPP

#include <cstdint>

namespace advlab {

// splitmix64 finalizer (Steele/Lea/Flood constants).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for an independent stream, e.g. one Monte Carlo trial. The derivation
// is a fixed function of (master, stream) so results never depend on how
// trials are distributed over workers.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

// Small deterministic generator used everywhere randomness is needed.
// Intentionally not std::mt19937: the splitmix sequence is pinned by this
// code, so seeded runs are reproducible across platforms and toolchains.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bit() { return next() >> 63; }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, m), unbiased (rejection sampling). m >= 1.
    std::uint64_t next_below(std::uint64_t m) {
        const std::uint64_t threshold = (0 - m) % m;  // 2^64 mod m
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % m;
        }
    }

   private:
    std::uint64_t state_;
};

}  // namespace advlab

#endif
