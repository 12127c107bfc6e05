#include "cylwig/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cylwig {

namespace {

int grid_floor(const LWindow& w) { return 4 * w.dim() + 2; }

void run_parallel(int npoints, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, npoints));
    if (threads == 1) {
        for (int i = 0; i < npoints; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([=, &body] {
            for (int i = t; i < npoints; i += threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Ring Fourier analysis: Ŵ(ℓ,k) = (1/nphi) Σ_j W(ℓ,φ_j) e^{ikφ_j}, the
// coefficient of e^{-ikφ}.  Exact for |k| ≤ dim-1 under the grid floor.
Eigen::VectorXcd ring_coefficients(const WignerField& f, int k) {
    const int dim = f.grid.window.dim();
    const int nphi = f.grid.nphi;
    Eigen::VectorXcd phase(nphi);
    for (int j = 0; j < nphi; ++j) phase(j) = std::polar(1.0, k * f.grid.phi(j));
    Eigen::VectorXcd out(dim);
    for (int i = 0; i < dim; ++i) {
        Complex s(0.0, 0.0);
        for (int j = 0; j < nphi; ++j) s += f.values(i, j) * phase(j);
        out(i) = s / double(nphi);
    }
    return out;
}

// Ring-data matrix of the odd harmonic k > 0: the kernel's odd sector maps
// the diagonal entries x_b = ϱ_{b,b+k} to ring coefficients through
//   Ŵ(ℓ,k) = (1/2π²) Σ_b (-1)^{m_b-ℓ}/(m_b-ℓ+½) x_b,  m_b = b + (k-1)/2.
Eigen::MatrixXcd odd_diagonal_matrix(const LWindow& w, int k) {
    const int dim = w.dim();
    const int nb = dim - k;
    Eigen::MatrixXcd a(dim, nb);
    for (int i = 0; i < dim; ++i) {
        const int l = w.level(i);
        for (int jb = 0; jb < nb; ++jb) {
            const int m = w.lmin + jb + (k - 1) / 2;
            a(i, jb) = parity_sign(m - l) / ((m - l + 0.5) * 2.0 * kPi * kPi);
        }
    }
    return a;
}

}  // namespace

CylinderGrid::CylinderGrid(LWindow w, int n) : window(w), nphi(n) {
    if (nphi < grid_floor(window))
        throw std::invalid_argument("CylinderGrid: nphi below the 4*dim+2 quadrature floor");
}

WignerField::WignerField(CylinderGrid g, Eigen::MatrixXd v) : grid(g), values(std::move(v)) {
    if (values.rows() != grid.window.dim() || values.cols() != grid.nphi)
        throw std::invalid_argument("WignerField: sample matrix does not match grid");
}

Operator displacement(const LWindow& w, int l, double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("displacement: non-finite angle");
    const Complex alpha = std::polar(1.0, -0.5 * l * phi);
    return alpha * (shift_power(w, -l) * rotation(w, phi));
}

Complex kernel_element(int l, double phi, int a, int b) {
    const int diff = a - b;
    if (diff % 2 == 0) {
        if (a + b != 2 * l) return Complex(0.0, 0.0);
        return std::polar(1.0 / kTwoPi, -diff * phi);
    }
    const int lpp = (a + b - 1) / 2 - l;   // a+b odd ⇒ a+b-1 even ⇒ exact division
    const double coeff = parity_sign(lpp) / ((lpp + 0.5) * 2.0 * kPi * kPi);
    return std::polar(coeff, -diff * phi);
}

Operator kernel_matrix(const LWindow& w, const PhasePoint& pt) {
    Eigen::MatrixXcd m(w.dim(), w.dim());
    for (int a = w.lmin; a <= w.lmax; ++a)
        for (int b = w.lmin; b <= w.lmax; ++b)
            m(w.index(a), w.index(b)) = kernel_element(pt.l, pt.phi, a, b);
    return Operator(w, std::move(m));
}

Operator kernel_oracle(const LWindow& w, const PhasePoint& pt, int nquad) {
    const int dim = w.dim();
    if (nquad < grid_floor(w))
        throw std::invalid_argument("kernel_oracle: nquad below the 4*dim+2 floor");
    if (nquad % 2 != 0) throw std::invalid_argument("kernel_oracle: nquad must be even");

    const double h = kTwoPi / nquad;
    Eigen::MatrixXcd fine = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd coarse = Eigen::MatrixXcd::Zero(dim, dim);

    // Trapezoid nodes φ'_j = -π + jh, j = 0..nquad; the nquad/2 rule reuses
    // the even-indexed nodes.
    for (int j = 0; j <= nquad; ++j) {
        const double x = -kPi + j * h;
        Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(dim, dim);
        for (int lp = -(dim - 1); lp <= dim - 1; ++lp)
            f += std::polar(1.0, -(lp * pt.phi - pt.l * x)) * displacement(w, lp, x).mat;
        const double wt = (j == 0 || j == nquad) ? 0.5 : 1.0;
        fine += (wt * h) * f;
        if (j % 2 == 0) coarse += (wt * 2.0 * h) * f;
    }
    Eigen::MatrixXcd m = (4.0 * fine - coarse) / (3.0 * kTwoPi * kTwoPi);
    return Operator(w, std::move(m));
}

WignerField wigner_map(const DensityMatrix& rho, const CylinderGrid& grid, int threads) {
    require_same_window(rho.window, grid.window);
    const LWindow& w = grid.window;
    const int dim = w.dim();
    const int nphi = grid.nphi;

    Eigen::MatrixXd values(dim, nphi);
    std::vector<double> worst_im(size_t(dim) * nphi, 0.0);

    std::function<void(int)> point = [&](int idx) {
        const int i = idx / nphi;
        const int j = idx % nphi;
        const int l = w.level(i);
        const double phi = grid.phi(j);

        // e^{-i(a-b)φ} depends on a-b only
        std::vector<Complex> ph(2 * dim - 1);
        for (int d = -(dim - 1); d <= dim - 1; ++d)
            ph[d + dim - 1] = std::polar(1.0, -d * phi);

        Complex s(0.0, 0.0);
        for (int a = w.lmin; a <= w.lmax; ++a) {
            for (int b = w.lmin; b <= w.lmax; ++b) {
                const Complex rho_ba = rho.mat(w.index(b), w.index(a));
                if (rho_ba == Complex(0.0, 0.0)) continue;
                const int diff = a - b;
                double coeff;
                if (diff % 2 == 0) {
                    if (a + b != 2 * l) continue;
                    coeff = 1.0 / kTwoPi;
                } else {
                    const int lpp = (a + b - 1) / 2 - l;
                    coeff = parity_sign(lpp) / ((lpp + 0.5) * 2.0 * kPi * kPi);
                }
                s += coeff * ph[diff + dim - 1] * rho_ba;
            }
        }
        values(i, j) = s.real();
        worst_im[size_t(idx)] = std::abs(s.imag());
    };
    run_parallel(dim * nphi, threads, point);

    const double im = *std::max_element(worst_im.begin(), worst_im.end());
    if (im >= kRealityTol)
        throw std::runtime_error("wigner_map: imaginary residue exceeds tolerance");
    return WignerField(grid, std::move(values));
}

InverseResult inverse_map(const WignerField& field) {
    const LWindow& w = field.grid.window;
    const int dim = w.dim();
    if (field.grid.nphi < grid_floor(w))
        throw std::invalid_argument("inverse_map: grid under-resolved");

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const Eigen::VectorXcd rings = ring_coefficients(field, k);
        if (k % 2 == 0) {
            // ϱ_{b,b+k} = 2π Ŵ(b + k/2, k): one ring per element
            for (int b = w.lmin; b + k <= w.lmax; ++b)
                rho(w.index(b), w.index(b + k)) = kInverseMapConstant * rings(w.index(b + k / 2));
        } else {
            const Eigen::MatrixXcd a = odd_diagonal_matrix(w, k);
            const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(rings);
            for (int b = w.lmin; b + k <= w.lmax; ++b)
                rho(w.index(b), w.index(b + k)) = x(w.index(b));
        }
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < i; ++j) rho(i, j) = std::conj(rho(j, i));
    return InverseResult{DensityMatrix::unchecked(w, std::move(rho)), kInverseMapConstant};
}

Marginals marginals(const WignerField& field) {
    Marginals m;
    m.p_l = field.values.rowwise().sum() * field.grid.step();
    m.p_phi = Eigen::VectorXd(field.grid.nphi);
    for (int j = 0; j < field.grid.nphi; ++j) m.p_phi(j) = field.values.col(j).sum();
    return m;
}

double field_normalization(const WignerField& field) {
    return field.values.sum() * field.grid.step();
}

double overlap(const WignerField& f1, const WignerField& f2) {
    if (!(f1.grid == f2.grid)) throw std::invalid_argument("overlap: grid mismatch");
    const LWindow& w = f1.grid.window;
    const int dim = w.dim();

    double total = 0.0;
    // even sector: literal quadrature, one ring per element
    for (int k = -(dim - 1); k <= dim - 1; ++k) {
        if (k % 2 != 0) continue;
        const Eigen::VectorXcd y1 = ring_coefficients(f1, k);
        const Eigen::VectorXcd y2 = ring_coefficients(f2, k);
        total += kTwoPi * kTwoPi * y2.dot(y1).real();
    }
    // odd sector: exact ℤ-resummation via the per-diagonal reconstructions
    for (int k = 1; k < dim; k += 2) {
        const Eigen::MatrixXcd a = odd_diagonal_matrix(w, k);
        const auto qr = a.colPivHouseholderQr();
        const Eigen::VectorXcd x1 = qr.solve(ring_coefficients(f1, k));
        const Eigen::VectorXcd x2 = qr.solve(ring_coefficients(f2, k));
        total += 2.0 * x2.dot(x1).real();
    }
    return total;
}

double covariance_check(const DensityMatrix& rho, const CylinderGrid& grid, int l0, double phi0) {
    const LWindow& w = grid.window;
    const int nphi = grid.nphi;

    const double steps = phi0 / grid.step();
    const long j0 = std::lround(steps);
    if (std::abs(steps - double(j0)) > 1e-9)
        throw std::invalid_argument("covariance_check: phi0 not grid-aligned");

    const Operator d = displacement(w, l0, phi0);
    const Eigen::MatrixXcd moved = d.mat * rho.mat * d.mat.adjoint();
    const WignerField f_moved = wigner_map(DensityMatrix::unchecked(w, moved), grid);
    const WignerField f = wigner_map(rho, grid);

    double worst = 0.0;
    for (int l = w.lmin; l <= w.lmax; ++l) {
        if (!w.contains(l - l0)) continue;
        for (int j = 0; j < nphi; ++j) {
            const int js = int(((j - j0) % nphi + nphi) % nphi);
            worst = std::max(worst, std::abs(f_moved.at(l, j) - f.at(l - l0, js)));
        }
    }
    return worst;
}

}  // namespace cylwig
