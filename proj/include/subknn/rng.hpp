#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace subknn {

/// Deterministic seeded generator: xoshiro256** (Blackman/Vigna), state
/// initialized from the seed with splitmix64. Pure 64-bit integer arithmetic,
/// so the raw output stream is identical on every platform.
///
/// One master seed fans out to per-purpose substreams by label hashing
/// (FNV-1a over the label, mixed into the master seed). Substreams are
/// statistically independent and never shared between workers.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Raw generator output.
    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double();

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal via Box-Muller (pairs cached; no rejection).
    double next_normal();

    /// Derived generator for an independent purpose-labeled stream.
    Rng substream(std::string_view label) const;
    Rng substream(std::string_view label, std::uint64_t index) const;

    /// In-place Fisher-Yates shuffle of 0..n-1 index vector.
    void shuffle(std::vector<std::size_t>& v);

    /// s distinct values from 0..n-1, returned sorted ascending.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t s);

private:
    std::uint64_t seed_ = 0;
    std::uint64_t state_[4] = {0, 0, 0, 0};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace subknn
