#include "cylwig/theta.hpp"

#include <limits>
#include <stdexcept>

namespace cylwig {

namespace {

constexpr double kRelCutoff = 1e-15;
constexpr int kMaxOrder = 64;
constexpr double kImGuard = 10.0;

// One symmetric pair q^{n²}(e^{2inz} + e^{-2inz}), assembled as single
// exponentials so q^{n²} underflow never meets e^{2n|Im z|} overflow.
Complex term_pair(int n, double logq, Complex z) {
    const double g = n * double(n) * logq;
    const Complex up = std::exp(Complex(g - 2.0 * n * z.imag(), 2.0 * n * z.real()));
    const Complex dn = std::exp(Complex(g + 2.0 * n * z.imag(), -2.0 * n * z.real()));
    return up + dn;
}

}  // namespace

double theta3_tail_bound(double q, double imz, int N) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("theta3_tail_bound: q must be in (0,1)");
    if (N < 1) throw std::invalid_argument("theta3_tail_bound: N must be >= 1");
    const double a = std::abs(imz);
    const double logq = std::log(q);
    const double r = std::exp((2 * N + 1) * logq + 2.0 * a);
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    const double head = 2.0 * std::exp(N * double(N) * logq + 2.0 * N * a);
    return head * r / (1.0 - r);
}

Complex theta3(Complex z, double q) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("theta3: non-finite argument");
    if (std::abs(z.imag()) > kImGuard)
        throw std::invalid_argument("theta3: |Im z| exceeds guard of 10");
    if (!(q >= 0.0 && q < 1.0))
        throw std::invalid_argument("theta3: nome must be in [0,1)");
    if (q == 0.0) return Complex(1.0, 0.0);   // only n = 0 survives

    const double logq = std::log(q);
    const double a = std::abs(z.imag());

    int N = 1;
    while (N < kMaxOrder && !(theta3_tail_bound(q, a, N) < kRelCutoff)) ++N;

    for (;;) {
        Complex s(0.0, 0.0);
        for (int n = N; n >= 1; --n) s += term_pair(n, logq, z);
        s += 1.0;
        if (N >= kMaxOrder || theta3_tail_bound(q, a, N) < kRelCutoff * std::abs(s)) return s;
        N = std::min(N + 4, kMaxOrder);
    }
}

}  // namespace cylwig
