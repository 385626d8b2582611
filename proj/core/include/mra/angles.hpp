#ifndef MRA_ANGLES_HPP
#define MRA_ANGLES_HPP

#include <cmath>

namespace mra {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Reduce an angle to the half-open principal range [-pi, pi).
// The boundary convention maps +pi to -pi.
inline double wrap_to_pi(double x) {
    double w = x - two_pi * std::floor((x + pi) / two_pi);
    // floor rounding can leave w == pi when x is a hair below an odd multiple of pi
    if (w >= pi) w -= two_pi;
    if (w < -pi) w += two_pi;
    return w;
}

// Distance on the circle: min over integers j of |a - b + 2*pi*j|, in [0, pi].
inline double circ_dist(double a, double b) {
    return std::fabs(wrap_to_pi(a - b));
}

// A rotation of the circular domain, stored as its principal representative.
struct RotationAngle {
    double alpha = 0.0;

    RotationAngle() = default;
    explicit RotationAngle(double radians) : alpha(wrap_to_pi(radians)) {}
};

}  // namespace mra

#endif
