// Counter-based pseudo-random generator for reproducible Monte Carlo.
//
// SplitMix64 in counter mode: draw i of stream s under seed k is
// mix(key(k, s) + i * golden), where mix is the SplitMix64 finalizer.
// Streams are independent by construction, so parallel replications can
// each own stream = replication index and the result is identical for any
// scheduling or thread count.  Normal variates use quantile inversion,
// keeping every draw a pure function of (seed, stream, counter).
#pragma once

#include <cstdint>

namespace macri {

class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed + kGolden * (stream + 1))) {}

    std::uint64_t next_u64() { return mix(key_ + kGolden * ++counter_); }

    // Uniform on the open interval (0,1); 2^53 equally spaced values.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal by inverse-CDF of next_uniform().
    double next_normal();

    bool next_bernoulli(double p) { return next_uniform() < p; }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace macri
