#ifndef MRA_SIGNAL_HPP
#define MRA_SIGNAL_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mra/angles.hpp"

namespace mra {

/**
 * A band-limited signal on the circle, stored per Fourier frequency as a
 * (magnitude, phase) pair. Frequency k = 1..K corresponds to index k-1.
 *
 * Invariants maintained by construction:
 *  - magnitudes[k] >= 0,
 *  - phases[k] in [-pi, pi),
 *  - a zero magnitude carries the canonical phase 0.
 */
struct SignalSpec {
    std::vector<double> magnitudes;
    std::vector<double> phases;

    SignalSpec() = default;
    SignalSpec(std::vector<double> mags, std::vector<double> phis);

    int k_max() const { return static_cast<int>(magnitudes.size()); }

    std::vector<std::complex<double>> to_complex() const;
    static SignalSpec from_complex(std::span<const std::complex<double>> coeffs);

    // Squared Euclidean norm of the real coefficient vector, sum of r_k^2.
    double squared_norm() const;

    bool operator==(const SignalSpec&) const = default;
};

// Rotate the circular domain: magnitudes unchanged, phase k advances by k*alpha.
SignalSpec rotate(const SignalSpec& signal, double alpha);
inline SignalSpec rotate(const SignalSpec& signal, RotationAngle alpha) {
    return rotate(signal, alpha.alpha);
}

// FNV-1a over the signal's canonical little-endian byte representation; used
// as a provenance tag on sample batches and batch files.
std::uint64_t signal_hash(const SignalSpec& signal);

}  // namespace mra

#endif
