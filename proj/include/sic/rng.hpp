#pragma once

#include <cstdint>
#include <vector>

namespace sic {

// xoshiro256** with splitmix64 seeding.
//
// All random sampling in the library goes through this engine rather than
// <random> distributions: the standard distributions are not specified
// bit-for-bit, so their output differs between library implementations.
// With this engine a fixed seed reproduces identical sample streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) { reseed(seed); }

    // Independent substream for Monte Carlo fan-out: stream tags a purpose
    // (e.g. side-information draws), index is typically the trial number.
    // Substreams derived from the same (seed, stream, index) coincide, so
    // results do not depend on the number of worker threads.
    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        Rng r(0);
        std::uint64_t x = seed;
        x = mix64(x ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        x = mix64(x ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
        r.reseed(x);
        return r;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0,1], safe as a log() argument.
    double next_double_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Uniform integer in [0, bound), unbiased.
    std::uint64_t next_below(std::uint64_t bound);

    // Standard normal (Box-Muller; second variate cached).
    double normal();

    // Gamma(shape, scale=1), shape > 0. Marsaglia-Tsang for shape >= 1,
    // boosted shape + power-of-uniform below 1, and chi-square shortcut
    // at shape = 1/2 (the Jeffreys case).
    double gamma(double shape);

    // Dirichlet draw; alpha entries > 0. Components floored away from
    // exact zero so results satisfy strict-positivity invariants.
    std::vector<double> dirichlet(const std::vector<double>& alpha);

    // Symmetric Dirichlet(alpha) of dimension k.
    std::vector<double> dirichlet_symmetric(double alpha, std::size_t k);

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) {
            sm += 0x9e3779b97f4a7c15ULL;
            w = mix64(sm);
        }
        have_cached_normal_ = false;
    }

    std::uint64_t s_[4] = {};
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace sic
