#pragma once

#include <cstdint>

#include "headmouse/trace.hpp"

namespace headmouse {

// SplitMix64 with the public-domain constants. The full stream layout below
// is a contract: noisy traces must be bit-reproducible across implementations.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
};

// One standard normal per call via Box-Muller, cosine branch only:
//   u1 = ((next() >> 11) + 1) * 2^-53   in (0, 1]
//   u2 = (next() >> 11) * 2^-53         in [0, 1)
//   z  = sqrt(-2 ln u1) * cos(2 pi u2)
double next_gaussian(SplitMix64& rng);

// Adds zero-mean Gaussian noise (std sigma_counts, clamped to ±3 sigma,
// rounded half away from zero) to the accel/gyro fields. One SplitMix64
// stream seeded with `seed`; draw order is ax, ay, az, gx, gy, gz within each
// row, rows in trace order. Results clamp to the signed 16-bit range.
Trace inject_noise(const Trace& tr, std::uint64_t seed, double sigma_counts);

}  // namespace headmouse
