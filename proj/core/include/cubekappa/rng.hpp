#ifndef CUBEKAPPA_RNG_HPP
#define CUBEKAPPA_RNG_HPP

#include <cstdint>
#include <vector>

namespace cubekappa {

/// splitmix64; self-contained so that sampled runs replay bit-for-bit on any
/// platform, which std::uniform_int_distribution does not guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    int int_in(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Independent stream for item `index` of a seeded batch.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
    mix.next();
    return mix;
}

/// Distinct values sampled from [0, universe) without replacement,
/// in selection order.
inline std::vector<int> sample_distinct(SplitMix64& rng, int universe, int count) {
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count && i < universe; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(universe - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace cubekappa

#endif
