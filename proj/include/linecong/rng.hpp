#pragma once

#include <cstdint>
#include <string_view>

namespace linecong {

// splitmix64: the fixed mixing function used everywhere randomness is needed.
// All sampling is deterministic in the seed and platform-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Child seed for the index-th independent subtask of a seeded run.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ ((index + 1) * 0xD1B54A32D192ED03ull));
}

// Human-readable description of mix_seed, recorded in report metadata.
inline constexpr std::string_view kSeedMixing =
    "child = splitmix64(seed XOR (index+1)*0xD1B54A32D192ED03)";

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound), bound >= 1. Rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

    // Signed draw from [-band, band].
    long long signed_band(long long band) {
        return static_cast<long long>(below(2 * band + 1)) - band;
    }

  private:
    std::uint64_t state_;
};

}  // namespace linecong
