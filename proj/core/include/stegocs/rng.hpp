#pragma once

#include <cmath>
#include <cstdint>

namespace stegocs {

// SplitMix64 (Steele/Lea/Flood; public-domain reference constants).
//
// Stego-keys are replayed by re-running this generator, so the algorithm is
// frozen: any change to next(), bounded() or the shuffle that consumes them
// breaks every key ever written. Test vectors are committed in the test
// suite; the algorithm is also written out in the README.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // floor(next() * n / 2^64). Bias is < n/2^64, irrelevant for shuffling,
    // and the fixed-point form replays identically on any platform.
    uint64_t bounded(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // uniform in [0, 1), 53 mantissa bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Box-Muller, consumes exactly two uniforms per call
    double gaussian() {
        double u1 = 1.0 - next_double(); // (0, 1], keeps log finite
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    uint64_t state_;
};

// Child stream for (master seed, stream index). One splitmix step over the
// xored inputs decorrelates neighboring indices.
inline uint64_t derive_seed(uint64_t master, uint64_t tag) {
    SplitMix64 rng(master ^ (tag * 0xA24BAED4963EE407ull));
    return rng.next();
}

} // namespace stegocs
