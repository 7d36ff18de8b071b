#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace closure {

// splitmix64 finalizer; used both as a hash mixer and as the stream generator.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// Counter-based random stream keyed by (master seed, substream name, two indices).
// Output at counter n is splitmix64(key + n); streams never interact, and adding
// a new named substream leaves existing draws untouched.
//
// Normal variates use an explicit Box-Muller so draws are identical across
// standard-library implementations.
class RngStream {
public:
    RngStream() : key_(0) {}

    RngStream(std::uint64_t master_seed, std::string_view name,
              std::uint64_t index0 = 0, std::uint64_t index1 = 0) {
        std::uint64_t k = splitmix64(master_seed ^ fnv1a64(name));
        k = splitmix64(k ^ index0);
        key_ = splitmix64(k ^ index1);
    }

    std::uint64_t next_u64() { return splitmix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    // Uniform on (0, 1), never exactly 0.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

    // For std::uniform_* distributions and shuffles.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace closure
