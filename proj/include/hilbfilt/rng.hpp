#pragma once

#include <cstdint>

namespace hilbfilt {

/// SplitMix64: the 64-bit splittable counter-based generator of Steele,
/// Lea and Flood (output n is a fixed mix of seed + n*gamma). Chosen so
/// corpora reproduce bit-for-bit across implementations; the sequence is
/// frozen by test vectors in tests/data/splitmix64_vectors.json.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform draw in [0, n) by plain reduction; the tiny modulo bias is
    /// irrelevant here and the recipe stays portable.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Inclusive range draw.
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Independent substream k of a root seed: substreams never collide
    /// with each other or the root because the mix is a bijection.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
        return SplitMix64(mix(seed ^ ((k + 1) * kGamma)));
    }

private:
    std::uint64_t state_;
};

} // namespace hilbfilt
