#include "cylwig/theta.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "testkit.hpp"

using cylwig::Complex;
using cylwig::theta3;
using cylwig::theta3_tail_bound;

namespace {

// independent oracle: direct partial sum Σ_{|n|<=N} q^{n²} e^{2inz}
Complex direct_series(Complex z, double q, int N) {
    Complex s(1.0, 0.0);
    for (int n = 1; n <= N; ++n) {
        const double w = std::pow(q, double(n) * n);
        s += w * (std::exp(Complex(0.0, 2.0 * n) * z) + std::exp(Complex(0.0, -2.0 * n) * z));
    }
    return s;
}

}  // namespace

int main() {
    TestKit t;
    const double inv_e = std::exp(-1.0);
    const double inv_e2 = std::exp(-2.0);

    // q = 0: only n = 0 survives, exactly
    t.check("theta3(z,0) == 1 exactly (real z)",
            theta3(Complex(0.7, 0.0), 0.0) == Complex(1.0, 0.0));
    t.check("theta3(z,0) == 1 exactly (complex z)",
            theta3(Complex(-2.0, 3.0), 0.0) == Complex(1.0, 0.0));

    // frozen oracle values, direct partial summation (remainder < e^{-81})
    const double oracle0 = direct_series(Complex(0, 0), inv_e, 8).real();
    t.check_near("theta3(0,1/e) vs direct-sum oracle", theta3(Complex(0, 0), inv_e).real(),
                 oracle0, 1e-15);
    t.check_near("theta3(0,1/e) frozen value", theta3(Complex(0, 0), inv_e).real(),
                 1.772637204826652, 1e-14);
    const double oracle_pi2 = direct_series(Complex(cylwig::kPi / 2, 0), inv_e, 8).real();
    t.check_near("theta3(pi/2,1/e) vs alternating oracle",
                 theta3(Complex(cylwig::kPi / 2, 0), inv_e).real(), oracle_pi2, 1e-15);
    t.check_near("theta3(pi/2,1/e) frozen value",
                 theta3(Complex(cylwig::kPi / 2, 0), inv_e).real(), 0.3006258008689843, 1e-14);

    // tail bound examples and monotonicity
    t.check_below("tail bound q=1/e, Im z=0, N=6", theta3_tail_bound(inv_e, 0.0, 6), 1e-15);
    t.check_below("tail bound q=1/e^2, Im z=0, N=5", theta3_tail_bound(inv_e2, 0.0, 5), 1e-20);
    {
        bool monotone = true;
        for (double imz : {0.0, 0.5}) {
            for (int n = 1; n < 12; ++n)
                monotone = monotone && theta3_tail_bound(inv_e, imz, n + 1) <=
                                           theta3_tail_bound(inv_e, imz, n);
        }
        t.check("tail bound monotone decreasing in N", monotone);
    }

    // truncation self-consistency: |S_N - S_{N+4}| within the bound
    {
        bool ok = true;
        for (double q : {0.2, inv_e, 0.6}) {
            for (Complex z : {Complex(0.3, 0.0), Complex(-1.2, 0.5), Complex(2.9, -0.4)}) {
                for (int n = 2; n <= 8; n += 2) {
                    const double gap = std::abs(direct_series(z, q, n) - direct_series(z, q, n + 4));
                    ok = ok && gap <= theta3_tail_bound(q, std::abs(z.imag()), n) * (1 + 1e-12);
                }
            }
        }
        t.check("partial sums at N and N+4 agree within the tail bound", ok);
    }
    {
        bool ok = true;
        for (double q : {0.1, inv_e, inv_e2}) {
            for (Complex z : {Complex(0.0, 0.0), Complex(1.4, 0.5), Complex(-0.6, -0.3)}) {
                ok = ok && std::abs(theta3(z, q) - direct_series(z, q, 24)) <=
                               theta3_tail_bound(q, std::abs(z.imag()), 20);
            }
        }
        t.check("theta3 matches the long direct series within its own bound", ok);
    }

    // periodicity / parity / reality invariants
    {
        double worst_p = 0.0, worst_m = 0.0, worst_re = 0.0, worst_cj = 0.0;
        for (double q : {0.1, inv_e, inv_e2, 0.55}) {
            for (double x : {-2.9, -0.7, 0.0, 0.4, 1.9}) {
                for (double y : {0.0, 0.25, 0.5}) {
                    const Complex z(x, y);
                    const Complex v = theta3(z, q);
                    worst_p = std::max(worst_p,
                                       std::abs(theta3(z + cylwig::kPi, q) - v) / std::abs(v));
                    worst_m = std::max(worst_m, std::abs(theta3(-z, q) - v) / std::abs(v));
                    worst_cj = std::max(worst_cj,
                                        std::abs(theta3(std::conj(z), q) - std::conj(v)) /
                                            std::abs(v));
                }
                worst_re = std::max(worst_re, std::abs(theta3(Complex(x, 0.0), q).imag()));
            }
        }
        t.check_below("periodicity theta3(z+pi,q) = theta3(z,q)", worst_p, 1e-14);
        t.check_below("parity theta3(-z,q) = theta3(z,q)", worst_m, 1e-14);
        t.check_below("reality on the real axis", worst_re, 1e-15);
        t.check_below("conjugation theta3(conj z) = conj theta3(z)", worst_cj, 1e-14);
    }

    // domain rejection
    t.check_throws("rejects q < 0", [] { theta3(Complex(0, 0), -0.1); });
    t.check_throws("rejects q >= 1", [] { theta3(Complex(0, 0), 1.0); });
    t.check_throws("rejects non-finite z", [] { theta3(Complex(NAN, 0.0), 0.5); });
    t.check_throws("rejects |Im z| > 10", [] { theta3(Complex(0.0, 11.0), 0.5); });
    t.check_throws("tail bound rejects q = 0", [] { theta3_tail_bound(0.0, 0.0, 3); });
    t.check_throws("tail bound rejects N = 0", [] { theta3_tail_bound(0.5, 0.0, 0); });

    return t.summary("theta");
}
