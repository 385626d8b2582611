#ifndef MRA_SAMPLE_HPP
#define MRA_SAMPLE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mra/signal.hpp"

namespace mra {

/**
 * A batch of N noisy rotated observations of a K-frequency signal, stored as
 * an N x K row-major complex matrix. sigma is the entrywise noise standard
 * deviation in the real 2K-coordinate basis, so the complex noise per
 * frequency has independent real and imaginary parts of unit variance each
 * when sigma = 1.
 *
 * Batches regenerate bit-identically from (signal, sigma, n, seed).
 */
struct SampleBatch {
    int k_max = 0;
    std::int64_t n = 0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t signal_hash = 0;
    bool no_rotation = false;
    std::vector<std::complex<double>> data;  // n rows of k_max entries

    std::complex<double> at(std::int64_t m, int k) const {
        return data[static_cast<std::size_t>(m) * k_max + (k - 1)];
    }
    std::span<const std::complex<double>> row(std::int64_t m) const {
        return {data.data() + static_cast<std::size_t>(m) * k_max,
                static_cast<std::size_t>(k_max)};
    }
};

/**
 * Draw N observations of the signal under uniformly random domain rotations
 * and additive complex Gaussian noise. sigma = 0 is accepted as a noiseless
 * debug mode; estimators themselves require sigma > 0.
 *
 * no_rotation = true generates the rotation-free law (all rotations pinned at
 * zero), used by the likelihood law-invariance diagnostics.
 *
 * Throws std::invalid_argument for sigma < 0 or n < 1.
 */
SampleBatch sample(const SignalSpec& signal, double sigma, std::int64_t n,
                   std::uint64_t seed, bool no_rotation = false);

}  // namespace mra

#endif
