#ifndef TABLECOUNT_RNG_HPP
#define TABLECOUNT_RNG_HPP

#include <cstdint>

namespace tablecount {

// SplitMix64 PRNG (Steele, Lea & Flood 2014). Used everywhere instead of
// <random> engines+distributions so that streams are bit-identical across
// platforms and standard library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1. Rejection sampling keeps the
    // result exactly uniform and platform-independent.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::uint64_t state_;
};

// Mixes a seed with stream coordinates (iteration index, cell indices, ...)
// so per-item generators are independent of scheduling order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
    SplitMix64 h(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xd1b54a32d192ed03ull) ^
                 (c * 0x8cb92ba72f3d8dd7ull) ^ (d * 0x2545f4914f6cdd1dull));
    h.next();
    return h.next();
}

}  // namespace tablecount

#endif
