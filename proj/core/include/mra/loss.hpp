#ifndef MRA_LOSS_HPP
#define MRA_LOSS_HPP

#include <functional>

#include "mra/signal.hpp"

namespace mra {

struct LossResult {
    double value = 0.0;        // min over alpha of ||estimate - g(alpha) reference||^2
    double align_angle = 0.0;  // the minimizing alpha
};

/**
 * Rotation-invariant squared-error loss between two signals of the same K:
 *
 *   L = sum_k (r_k - r'_k)^2
 *       + min_alpha sum_k 2 r_k r'_k (1 - cos(phi_ref - phi_est + k alpha))
 *
 * The alpha objective is a degree-K trigonometric polynomial; the minimizer
 * is located on a uniform grid of max(1024, 64 K) points and refined with
 * golden-section search on the winning bracket, which is enough to isolate
 * the global basin since the derivative has at most 2K zeros.
 *
 * Throws std::invalid_argument on mismatched K.
 */
LossResult loss_aligned(const SignalSpec& estimate, const SignalSpec& reference);

inline double loss(const SignalSpec& estimate, const SignalSpec& reference) {
    return loss_aligned(estimate, reference).value;
}

// Rotate `estimate` onto the orbit representative closest to `reference`:
// the returned signal minimizes ||g(beta) estimate - reference||.
SignalSpec align_to(const SignalSpec& estimate, const SignalSpec& reference);

// Minimize a scalar function of an angle over [-pi, pi): uniform grid of
// `grid_points`, then golden-section refinement on the best bracket. Shared
// by the loss, the ell-infinity pilot, and the KL diagnostics.
struct AngleMinimum {
    double angle = 0.0;
    double value = 0.0;
};
AngleMinimum minimize_over_angle(const std::function<double(double)>& objective,
                                 int grid_points);

}  // namespace mra

#endif
