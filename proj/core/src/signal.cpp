#include "mra/signal.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace mra {

SignalSpec::SignalSpec(std::vector<double> mags, std::vector<double> phis)
    : magnitudes(std::move(mags)), phases(std::move(phis)) {
    if (magnitudes.size() != phases.size()) {
        throw std::invalid_argument("SignalSpec: magnitude/phase length mismatch");
    }
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        if (!(magnitudes[i] >= 0.0)) {
            throw std::invalid_argument("SignalSpec: negative or NaN magnitude");
        }
        phases[i] = magnitudes[i] == 0.0 ? 0.0 : wrap_to_pi(phases[i]);
    }
}

std::vector<std::complex<double>> SignalSpec::to_complex() const {
    std::vector<std::complex<double>> out(magnitudes.size());
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        out[i] = std::polar(magnitudes[i], phases[i]);
    }
    return out;
}

SignalSpec SignalSpec::from_complex(std::span<const std::complex<double>> coeffs) {
    std::vector<double> mags(coeffs.size()), phis(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        mags[i] = std::abs(coeffs[i]);
        phis[i] = mags[i] == 0.0 ? 0.0 : wrap_to_pi(std::arg(coeffs[i]));
    }
    return SignalSpec(std::move(mags), std::move(phis));
}

double SignalSpec::squared_norm() const {
    double s = 0.0;
    for (double r : magnitudes) s += r * r;
    return s;
}

SignalSpec rotate(const SignalSpec& signal, double alpha) {
    SignalSpec out = signal;
    for (int k = 1; k <= signal.k_max(); ++k) {
        double& phi = out.phases[k - 1];
        phi = out.magnitudes[k - 1] == 0.0 ? 0.0 : wrap_to_pi(phi + k * alpha);
    }
    return out;
}

std::uint64_t signal_hash(const SignalSpec& signal) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](double x) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    feed(static_cast<double>(signal.k_max()));
    for (double r : signal.magnitudes) feed(r);
    for (double p : signal.phases) feed(p);
    return h;
}

}  // namespace mra
