#include "cylwig/states.hpp"

#include <cmath>
#include <stdexcept>

#include "cylwig/theta.hpp"

namespace cylwig {

namespace {

constexpr int kCoverage = 6;            // coherent builder needs window ⊇ ℓ₀ ± 6
constexpr int kOddSumRange = 12;        // Gaussian-damped ℓ'-sum cutoff, terms < e^{-132}
constexpr double kResidueTol = 1e-10;   // allowed imaginary residue of the odd part

double theta3_zero_inv_e() {
    static const double value = theta3(Complex(0.0, 0.0), std::exp(-1.0)).real();
    return value;
}

}  // namespace

SuperpositionLabel::SuperpositionLabel(int a, int b, double p)
    : l1(a), l2(b), phi0(reduce_angle(p)) {
    if (a == b) throw std::invalid_argument("SuperpositionLabel: l1 == l2");
}

StateVector coherent_state(const LWindow& w, const CoherentLabel& label) {
    if (w.lmin > label.l0 - kCoverage || w.lmax < label.l0 + kCoverage)
        throw std::invalid_argument("coherent_state: window must cover l0 +/- 6");
    const double norm = 1.0 / std::sqrt(theta3_zero_inv_e());
    Eigen::VectorXcd amp(w.dim());
    for (int l = w.lmin; l <= w.lmax; ++l) {
        const double m = l - label.l0;
        amp(w.index(l)) = std::polar(norm * std::exp(-0.5 * m * m), -l * label.phi0);
    }
    StateVector psi(w, std::move(amp));
    if (psi.tail_mass() >= kTailBudget)
        throw std::invalid_argument("coherent_state: window leaves edge mass above budget");
    return psi;
}

StateVector superposition_state(const LWindow& w, const SuperpositionLabel& label) {
    if (!w.contains(label.l1) || !w.contains(label.l2))
        throw std::invalid_argument("superposition_state: label outside window");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(w.dim());
    const double r = 1.0 / std::sqrt(2.0);
    amp(w.index(label.l1)) = r;
    amp(w.index(label.l2)) = std::polar(r, label.phi0);
    return StateVector(w, std::move(amp));
}

double analytic_wigner_lstate(int l0, const PhasePoint& pt) {
    return pt.l == l0 ? 1.0 / kTwoPi : 0.0;
}

AngleWignerSample analytic_wigner_anglestate(double phi0, const PhasePoint& pt) {
    AngleWignerSample s;
    s.comb_location = reduce_angle(phi0);
    s.comb_weight = 1.0 / kTwoPi;
    s.on_comb = std::abs(reduce_angle(pt.phi - phi0)) < 1e-12;
    s.value = 0.0;
    return s;
}

CoherentWignerParts analytic_wigner_coherent_parts(const CoherentLabel& label,
                                                   const PhasePoint& pt) {
    const double th0 = theta3_zero_inv_e();
    const double u = pt.phi - label.phi0;
    const double dl = pt.l - label.l0;

    const double even =
        std::exp(-dl * dl) * theta3(Complex(u, 0.0), std::exp(-1.0)).real() / (kTwoPi * th0);

    // alternating Gaussian-damped sum of Eq.-type 1/(ℓ'+ℓ₀-ℓ+½) terms
    double alt = 0.0;
    for (int lp = -kOddSumRange; lp <= kOddSumRange; ++lp) {
        const long swing = long(lp) - pt.l + label.l0;
        alt += parity_sign(swing) * std::exp(double(-lp) * lp - lp) / (swing + 0.5);
    }
    const Complex pref =
        std::exp(Complex(-0.5, u)) * theta3(Complex(u, 0.5), std::exp(-1.0)) /
        (2.0 * kPi * kPi * th0);
    const Complex odd = pref * alt;
    if (std::abs(odd.imag()) >= kResidueTol)
        throw std::runtime_error("analytic_wigner_coherent: imaginary residue above tolerance");
    return CoherentWignerParts{even, odd.real()};
}

double analytic_wigner_coherent(const CoherentLabel& label, const PhasePoint& pt) {
    const CoherentWignerParts parts = analytic_wigner_coherent_parts(label, pt);
    return parts.even + parts.odd;
}

double analytic_wigner_superposition(const SuperpositionLabel& label, const PhasePoint& pt) {
    const double osc = std::cos(label.phi0 + (label.l2 - label.l1) * pt.phi);
    double even = 0.0;
    if (pt.l == label.l1) even += 1.0;
    if (pt.l == label.l2) even += 1.0;
    if (label.l1 + label.l2 == 2 * pt.l) even += 2.0 * osc;
    even /= 2.0 * kTwoPi;

    double odd = 0.0;
    const int sum = label.l1 + label.l2;
    if (sum % 2 != 0) {
        const long sign_exp = pt.l + (sum - 1) / 2;
        odd = osc * parity_sign(sign_exp) / ((sum - 2 * pt.l) * kPi * kPi);
    }
    return even + odd;
}

}  // namespace cylwig
