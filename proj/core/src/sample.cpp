#include "mra/sample.hpp"

#include <stdexcept>

#include "mra/rng.hpp"

namespace mra {

SampleBatch sample(const SignalSpec& signal, double sigma, std::int64_t n,
                   std::uint64_t seed, bool no_rotation) {
    if (sigma < 0.0) throw std::invalid_argument("sample: sigma must be >= 0");
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");

    const int k_max = signal.k_max();
    SampleBatch batch;
    batch.k_max = k_max;
    batch.n = n;
    batch.sigma = sigma;
    batch.seed = seed;
    batch.signal_hash = mra::signal_hash(signal);
    batch.no_rotation = no_rotation;
    batch.data.resize(static_cast<std::size_t>(n) * k_max);

    Rng rng(seed);
    for (std::int64_t m = 0; m < n; ++m) {
        const double alpha = no_rotation ? 0.0 : rng.angle();
        auto* row = batch.data.data() + static_cast<std::size_t>(m) * k_max;
        for (int k = 1; k <= k_max; ++k) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            const std::complex<double> clean =
                std::polar(signal.magnitudes[k - 1],
                           signal.phases[k - 1] + k * alpha);
            row[k - 1] = clean + sigma * std::complex<double>(re, im);
        }
    }
    return batch;
}

}  // namespace mra
