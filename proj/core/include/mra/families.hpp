#ifndef MRA_FAMILIES_HPP
#define MRA_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "mra/signal.hpp"

namespace mra {

// Generic signal family: magnitudes uniform on [c_lo*r, c_hi*r], phases
// uniform on [-pi, pi). Requires 0 < c_lo <= c_hi.
SignalSpec generic_signal(int k_max, double r, double c_lo, double c_hi,
                          std::uint64_t seed);

/**
 * Label of a vertex in the hypercube signal family: phase k is tau_k * phi
 * with a common offset phi in [0, pi/3] and all magnitudes equal.
 */
struct HypercubeLabel {
    std::vector<std::uint8_t> tau;  // bits, length K
    double phi = 0.0;               // in [0, pi/3]
};

SignalSpec hypercube_signal(int k_max, double r, const HypercubeLabel& label);

// The largest phase offset for which neighboring hypercube signals stay
// within KL divergence 1/N of each other:
//   phi = min( max(sqrt(2 sigma^2), sqrt(A)) / (r sqrt(N)), pi/3 ),
//   A = 2 sigma^6 / (3 K r^4 exp(3 K r^2 / (2 sigma^2))).
// The exponential is treated as infinite (A = 0) when its argument exceeds
// 700 to avoid overflow.
double assouad_phi(int k_max, double r, double sigma, std::int64_t n);

// KL divergence bound between the observation mixtures of two signals:
// the data-processing bound ||theta - theta'||^2 / (2 sigma^2).
double kl_upper_gaussian(const SignalSpec& theta, const SignalSpec& theta_p,
                         double sigma);

// High-noise KL bound for the same pair, with the alignment infimum computed
// by the same angle-grid search used by the loss.
double kl_upper_mixture(const SignalSpec& theta, const SignalSpec& theta_p,
                        double sigma);

}  // namespace mra

#endif
