#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace cylwig {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Canonical angle interval is [-π, π); +π folds to -π.
inline double reduce_angle(double phi) {
    double r = std::remainder(phi, kTwoPi);   // lands in [-π, π]
    return r == kPi ? -kPi : r;
}

// (-1)^n for any integer sign.
inline double parity_sign(long n) {
    return (n % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace cylwig
