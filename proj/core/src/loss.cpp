#include "mra/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mra {

AngleMinimum minimize_over_angle(const std::function<double(double)>& objective,
                                 int grid_points) {
    const double h = two_pi / grid_points;
    int best = 0;
    double best_val = objective(-pi);
    for (int i = 1; i < grid_points; ++i) {
        const double v = objective(-pi + i * h);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }

    // Golden-section on the bracket around the best grid point.
    constexpr double inv_golden = 0.6180339887498949;
    double a = -pi + (best - 1) * h;
    double b = -pi + (best + 1) * h;
    double c1 = b - inv_golden * (b - a);
    double c2 = a + inv_golden * (b - a);
    double f1 = objective(c1);
    double f2 = objective(c2);
    for (int it = 0; it < 90 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - inv_golden * (b - a);
            f1 = objective(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + inv_golden * (b - a);
            f2 = objective(c2);
        }
    }
    const double angle = 0.5 * (a + b);
    return {angle, std::min({objective(angle), f1, f2, best_val})};
}

LossResult loss_aligned(const SignalSpec& estimate, const SignalSpec& reference) {
    const int k_max = estimate.k_max();
    if (k_max != reference.k_max()) {
        throw std::invalid_argument("loss: signals have different K");
    }

    double magnitude_part = 0.0;
    std::vector<double> weight(k_max), delta(k_max);
    for (int k = 0; k < k_max; ++k) {
        const double d = estimate.magnitudes[k] - reference.magnitudes[k];
        magnitude_part += d * d;
        weight[k] = 2.0 * estimate.magnitudes[k] * reference.magnitudes[k];
        delta[k] = reference.phases[k] - estimate.phases[k];
    }

    auto phase_objective = [&](double alpha) {
        double s = 0.0;
        for (int k = 0; k < k_max; ++k) {
            s += weight[k] * (1.0 - std::cos(delta[k] + (k + 1) * alpha));
        }
        return s;
    };

    const int grid = std::max(1024, 64 * k_max);
    const AngleMinimum m = minimize_over_angle(phase_objective, grid);
    return {magnitude_part + std::max(0.0, m.value), m.angle};
}

SignalSpec align_to(const SignalSpec& estimate, const SignalSpec& reference) {
    // ||estimate - g(a*) reference|| = ||g(-a*) estimate - reference||
    const LossResult r = loss_aligned(estimate, reference);
    return rotate(estimate, -r.align_angle);
}

}  // namespace mra
