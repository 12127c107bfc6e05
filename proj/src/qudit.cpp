#include "cylwig/qudit.hpp"

#include <cmath>
#include <stdexcept>

namespace cylwig {

namespace {

constexpr double kQuditHermTol = 1e-10;
constexpr double kQuditRealityTol = 1e-12;

long mod(long a, long d) { return ((a % d) + d) % d; }

}  // namespace

QuditOperator::QuditOperator(int dim, Eigen::MatrixXcd m) : d(dim), mat(std::move(m)) {
    if (mat.rows() != d || mat.cols() != d)
        throw std::invalid_argument("QuditOperator: matrix size does not match dimension");
}

QuditPhaseSpace::QuditPhaseSpace(int dim) : d(dim) {
    if (d < 2) throw std::invalid_argument("QuditPhaseSpace: dimension must be >= 2");
    omega = std::polar(1.0, kTwoPi / d);
    inv2 = (d % 2 == 1) ? double((d + 1) / 2) : 0.5;

    // measured constants: overlap from w(0,0), round trip from |0⟩⟨0|
    const QuditOperator w00 = qudit_kernel(*this, 0, 0);
    gamma = (w00.mat * w00.mat).trace().real();

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    rho(0, 0) = 1.0;
    Eigen::MatrixXcd back = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const QuditOperator w = qudit_kernel(*this, k, l);
            back += (rho * w.mat).trace().real() * w.mat;
        }
    inverse_constant = 1.0 / back(0, 0).real();
}

Complex QuditPhaseSpace::omega_power(long m) const {
    return std::polar(1.0, kTwoPi * double(mod(m, d)) / d);
}

double QuditPhaseSpace::phase(int k, int l) const {
    const long kk = mod(k, d);
    const long ll = mod(l, d);
    if (d % 2 == 1) {
        const long t = mod(long(inv2) * mod(kk * ll, d), d);
        return -kTwoPi * double(t) / d;
    }
    return -kPi * double(kk * ll) / d;
}

std::pair<QuditOperator, QuditOperator> pauli_ops(int d) {
    if (d < 2) throw std::invalid_argument("pauli_ops: dimension must be >= 2");
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        z(n, n) = std::polar(1.0, kTwoPi * n / d);
        x((n + 1) % d, n) = 1.0;
    }
    return {QuditOperator(d, std::move(z)), QuditOperator(d, std::move(x))};
}

QuditOperator qudit_displacement(const QuditPhaseSpace& space, int k, int l) {
    const int d = space.d;
    const Complex front = std::polar(1.0, space.phase(k, l));
    // (Z^k X^l)|n⟩ = ω^{k(n+l)} |n+l⟩, exponents reduced mod d before assembly
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        const long row = mod(n + l, d);
        m(row, n) = front * space.omega_power(long(k) * row);
    }
    return QuditOperator(d, std::move(m));
}

QuditOperator qudit_kernel(const QuditPhaseSpace& space, int k, int l) {
    const int d = space.d;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            m += space.omega_power(long(k) * b - long(l) * a) * qudit_displacement(space, a, b).mat;
    return QuditOperator(d, m / double(d * d));
}

Eigen::MatrixXd qudit_wigner_map(const QuditOperator& rho, const QuditPhaseSpace& space) {
    const int d = space.d;
    if (rho.d != d) throw std::invalid_argument("qudit_wigner_map: dimension mismatch");
    if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > kQuditHermTol)
        throw std::invalid_argument("qudit_wigner_map: input not Hermitian");
    Eigen::MatrixXd field(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const Complex v = (rho.mat * qudit_kernel(space, k, l).mat).trace();
            if (std::abs(v.imag()) >= kQuditRealityTol)
                throw std::runtime_error("qudit_wigner_map: imaginary residue above tolerance");
            field(k, l) = v.real();
        }
    return field;
}

QuditOperator qudit_inverse(const Eigen::MatrixXd& field, const QuditPhaseSpace& space) {
    const int d = space.d;
    if (field.rows() != d || field.cols() != d)
        throw std::invalid_argument("qudit_inverse: field size does not match dimension");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) rho += field(k, l) * qudit_kernel(space, k, l).mat;
    return QuditOperator(d, space.inverse_constant * rho);
}

}  // namespace cylwig
