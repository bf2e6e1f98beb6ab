#pragma once

#include <cmath>
#include <cstdint>

namespace stabledrift {

// Counter-based random stream keyed by (master seed, stream id). Output i
// depends only on (seed, stream, i), so Monte-Carlo replicates can be farmed
// out to any thread in any order and still reproduce bit-identically.
//
// Each draw applies the SplitMix64 finalizer to key + counter * gamma; the
// key itself is hashed from (seed, stream) so distinct streams start in
// unrelated regions of the counter sequence.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive_key(seed, stream)) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

    // Uniform on the open interval (0, 1); never returns an endpoint, so
    // logs and tangents of the result stay finite.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard exponential by inversion.
    double next_exponential() { return -std::log(next_uniform()); }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        const std::uint64_t s = mix(seed + 0x6A09E667F3BCC909ull);
        return mix(s ^ mix(stream + kGamma));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace stabledrift
