#pragma once

// Seedable random streams with replication-indexed substreams.
//
// The simulation contract is: identical (seed, reps, params) produce a
// bit-identical sample multiset for ANY worker count.  That rules out
// std::normal_distribution and friends (their output sequences are
// implementation-defined), so the generator and the variate transforms
// are spelled out here.  Each replication gets its own stream derived
// from (seed, replication index); a stream is confined to one execution
// context at a time.

#include <cstdint>
#include <cmath>

namespace twroot {

// SplitMix64: used to expand (seed, index) into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ core generator.
class RngStream {
public:
    // Stream for one replication: state depends only on (seed, index).
    RngStream(std::uint64_t seed, std::uint64_t index = 0) {
        std::uint64_t sm = seed ^ (0xd1342543de82ef95ULL * (index + 1));
        for (auto& w : s_) w = splitmix64(sm);
        have_cached_normal_ = false;
        cached_normal_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1): 53-bit mantissa centered off 0.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal by Box-Muller; both values of each pair are used.
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        cached_normal_ = r * std::sin(t);
        have_cached_normal_ = true;
        return r * std::cos(t);
    }

    // Gamma(shape, scale=1) by the Marsaglia-Tsang squeeze.  The
    // rejection count varies by stream position, which is fine:
    // determinism is per (seed, index), not per call budget.
    double gamma(double shape) {
        if (shape < 1.0) {
            // boost to shape+1 and scale back by u^(1/shape)
            const double g = gamma(shape + 1.0);
            const double u = uniform();
            return g * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Chi-squared with (possibly large) integer or half-integer df.
    double chisq(double df) { return 2.0 * gamma(0.5 * df); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
    bool have_cached_normal_;
    double cached_normal_;
};

} // namespace twroot
