#pragma once

#include <cstdint>

namespace incrun {

// Counter-based generator: the d-th draw of trial t under seed s is
//   mix64(mix64(s + (t+1)*gamma) + (d+1)*gamma)
// with the splitmix64 finalizer and golden-ratio increment. A draw is a pure
// function of (seed, trial, draw), so trial streams are independent and the
// results cannot depend on execution order or thread count.
inline constexpr char kRngDescription[] =
    "splitmix64 counter keyed by (seed, trial, draw)";

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// One trial's stream. Draws are indexed; advancing is just incrementing the
/// counter, and any draw can be recomputed from its index alone.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : key_(mix64(seed + (trial + 1) * kGoldenGamma)) {}

    std::uint64_t next_u64() { return mix64(key_ + (++draw_) * kGoldenGamma); }

    /// Uniform in [0, 1), 53 random bits.
    double next_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [1, sides], unbiased via rejection.
    long next_face(long sides) {
        const std::uint64_t s = static_cast<std::uint64_t>(sides);
        const std::uint64_t limit = (0 - s) % s;  // 2^64 mod s
        std::uint64_t x = next_u64();
        while (x < limit) {
            x = next_u64();
        }
        return static_cast<long>(x % s) + 1;
    }

private:
    std::uint64_t key_;
    std::uint64_t draw_ = 0;
};

}  // namespace incrun
