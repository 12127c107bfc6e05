#include "cylwig/lattice.hpp"

#include <stdexcept>

namespace cylwig {

LWindow::LWindow(int lo, int hi) : lmin(lo), lmax(hi) {
    if (lo > hi) throw std::invalid_argument("LWindow: lmin > lmax");
}

int LWindow::index(int l) const {
    if (!contains(l)) throw std::out_of_range("LWindow: level outside window");
    return l - lmin;
}

void require_same_window(const LWindow& a, const LWindow& b) {
    if (!(a == b)) throw std::invalid_argument("window mismatch");
}

Operator::Operator(LWindow w, Eigen::MatrixXcd m) : window(w), mat(std::move(m)) {
    if (mat.rows() != window.dim() || mat.cols() != window.dim())
        throw std::invalid_argument("Operator: matrix size does not match window");
}

Operator Operator::identity(LWindow w) {
    return Operator(w, Eigen::MatrixXcd::Identity(w.dim(), w.dim()));
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_window(a.window, b.window);
    return Operator(a.window, a.mat * b.mat);
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_window(a.window, b.window);
    return Operator(a.window, a.mat + b.mat);
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_window(a.window, b.window);
    return Operator(a.window, a.mat - b.mat);
}

Operator operator*(Complex c, const Operator& a) { return Operator(a.window, c * a.mat); }

StateVector::StateVector(LWindow w, Eigen::VectorXcd a) : window(w), amp(std::move(a)) {
    if (amp.size() != window.dim())
        throw std::invalid_argument("StateVector: amplitude count does not match window");
    if (std::abs(amp.squaredNorm() - 1.0) > kNormTol)
        throw std::invalid_argument("StateVector: not normalized (use unnormalized() to flag)");
}

StateVector StateVector::unnormalized(LWindow w, Eigen::VectorXcd a) {
    StateVector s(w, Eigen::VectorXcd::Zero(w.dim()));
    if (a.size() != w.dim())
        throw std::invalid_argument("StateVector: amplitude count does not match window");
    s.amp = std::move(a);
    s.normalized = false;
    return s;
}

double StateVector::tail_mass() const {
    return std::norm(amp(0)) + std::norm(amp(window.dim() - 1));
}

DensityMatrix DensityMatrix::physical(LWindow w, Eigen::MatrixXcd m) {
    if (m.rows() != w.dim() || m.cols() != w.dim())
        throw std::invalid_argument("DensityMatrix: matrix size does not match window");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > kNormTol || std::abs(m.trace().imag()) > kNormTol)
        throw std::invalid_argument("DensityMatrix: trace != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    return DensityMatrix(w, std::move(m));
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    if (!psi.normalized) throw std::invalid_argument("DensityMatrix: state not normalized");
    return DensityMatrix(psi.window, psi.amp * psi.amp.adjoint());
}

DensityMatrix DensityMatrix::unchecked(LWindow w, Eigen::MatrixXcd m) {
    if (m.rows() != w.dim() || m.cols() != w.dim())
        throw std::invalid_argument("DensityMatrix: matrix size does not match window");
    return DensityMatrix(w, std::move(m));
}

Operator shift_op(const LWindow& w) { return shift_power(w, 1); }

Operator shift_power(const LWindow& w, int k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
    for (int b = w.lmin; b <= w.lmax; ++b)
        if (w.contains(b - k)) m(w.index(b - k), w.index(b)) = 1.0;
    return Operator(w, std::move(m));
}

Operator angmom_op(const LWindow& w) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
    for (int l = w.lmin; l <= w.lmax; ++l) m(w.index(l), w.index(l)) = double(l);
    return Operator(w, std::move(m));
}

std::pair<Operator, Operator> euler_ops(const LWindow& w) {
    const Operator e = shift_op(w);
    const Operator ed = e.adjoint();
    Operator c(w, 0.5 * (e.mat + ed.mat));
    Operator s(w, (e.mat - ed.mat) / Complex(0.0, 2.0));
    return {std::move(c), std::move(s)};
}

Operator rotation(const LWindow& w, double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("rotation: non-finite angle");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
    for (int l = w.lmin; l <= w.lmax; ++l)
        m(w.index(l), w.index(l)) = std::polar(1.0, -phi * l);
    return Operator(w, std::move(m));
}

Complex angle_amplitude(const StateVector& psi, double phi) {
    Complex s(0.0, 0.0);
    for (int l = psi.window.lmin; l <= psi.window.lmax; ++l)
        s += std::polar(1.0, l * phi) * psi.amp(psi.window.index(l));
    return s / std::sqrt(kTwoPi);
}

}  // namespace cylwig
