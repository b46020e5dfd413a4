#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace reachset {

/// One step of the splitmix64 sequence; advances `state` and returns the output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stream seed for a numbered sub-task (trial, cell, ...). The constructor's
/// splitmix expansion decorrelates streams whose raw seeds differ in few bits.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return base ^ stream;
}

/// xoshiro256++ with Box-Muller normals. Self-contained so that sampling is
/// reproducible for a given seed regardless of thread count or call context.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64_next(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform01_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal; generates Box-Muller pairs and caches the spare.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double m = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = m * std::sin(a);
        have_spare_ = true;
        return m * std::cos(a);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection to avoid modulo bias
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace reachset
