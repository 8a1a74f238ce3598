#ifndef NPDNN_RNG_HPP
#define NPDNN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace npdnn {

/// Deterministic 64-bit generator (splitmix64). Doubles are produced from the
/// top 53 bits of the state output, gaussians via Box-Muller. The sequence is
/// fixed by the seed alone, so identical seeds reproduce identical streams on
/// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Unbiased integer in [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// Standard normal via Box-Muller (one draw per call, no caching so the
    /// stream position stays easy to reason about).
    double gaussian() {
        const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::uint64_t state_;
};

/// Fixed (seed, tag) derivation: every pipeline stage pulls its own stream
/// from the one user-facing seed, so adding a stage never shifts another
/// stage's randomness.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    SplitMix64 mix(seed ^ h);
    return mix.next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (index * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
    return mix.next_u64();
}

}  // namespace npdnn

#endif  // NPDNN_RNG_HPP
