#include "headmouse/noise.hpp"

#include <cmath>

namespace headmouse {

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double next_gaussian(SplitMix64& rng) {
    const double u1 = static_cast<double>((rng.next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

// Clamping to ±3 sigma bounds the worst-case tilt disturbance, which makes
// the dead-zone stability check exact instead of probabilistic.
std::int16_t perturb(std::int16_t value, double sigma, SplitMix64& rng) {
    double n = next_gaussian(rng) * sigma;
    if (n > 3.0 * sigma) n = 3.0 * sigma;
    if (n < -3.0 * sigma) n = -3.0 * sigma;
    const long long sum = static_cast<long long>(value) + std::llround(n);
    if (sum < -32768) return -32768;
    if (sum > 32767) return 32767;
    return static_cast<std::int16_t>(sum);
}

}  // namespace

Trace inject_noise(const Trace& tr, std::uint64_t seed, double sigma_counts) {
    SplitMix64 rng(seed);
    Trace out = tr;
    for (TraceRow& row : out) {
        row.ax = perturb(row.ax, sigma_counts, rng);
        row.ay = perturb(row.ay, sigma_counts, rng);
        row.az = perturb(row.az, sigma_counts, rng);
        row.gx = perturb(row.gx, sigma_counts, rng);
        row.gy = perturb(row.gy, sigma_counts, rng);
        row.gz = perturb(row.gz, sigma_counts, rng);
    }
    return out;
}

}  // namespace headmouse
