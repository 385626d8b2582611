#ifndef MRA_RNG_HPP
#define MRA_RNG_HPP

#include <cstdint>

#include "mra/angles.hpp"

namespace mra {

// Finalizer from the splitmix64 generator; also used as the stream-derivation hash.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Combine a seed with a tag into a new independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed + 0x9e3779b97f4a7c15ull * (tag + 1));
}

/**
 * Counter-based splittable pseudo-random stream (splitmix64).
 *
 * Every draw is a pure function of (seed, counter), so streams for parallel
 * replicates are derived with derive_seed and never share state. All
 * floating-point draws are built from integer output only, which keeps
 * sequences bit-identical across platforms and thread counts.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform angle on [-pi, pi).
    double angle() {
        return -pi + two_pi * uniform01();
    }

    // Standard normal via Box-Muller; pairs are cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        have_spare_ = true;
        spare_ = radius * std::sin(two_pi * u2);
        return radius * std::cos(two_pi * u2);
    }

    Rng split(std::uint64_t tag) const {
        return Rng(derive_seed(state_, tag));
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mra

#endif
