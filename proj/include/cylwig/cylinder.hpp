#pragma once

#include <utility>

#include "cylwig/lattice.hpp"

namespace cylwig {

/*
 * Weyl–Wigner machinery on the semi-discrete cylinder ℤ × S¹.
 *
 * Displacements  D(ℓ,φ) = e^{-iℓφ/2} Ê^{-ℓ} e^{-iφL̂}  (phase α = -ℓφ/2,
 * the unique choice linear in both arguments with α(ℓ,φ)+α(-ℓ,-φ) = ℓφ).
 *
 * The kernel w(ℓ,φ) is the double Fourier transform of D.  Per matrix
 * element it collapses to a single closed-form term, split by the parity
 * of a−b:
 *
 *   a−b even:  ⟨a|w(ℓ,φ)|b⟩ = (1/2π) e^{-i(a-b)φ} δ_{a+b,2ℓ}
 *   a−b odd:   ⟨a|w(ℓ,φ)|b⟩ = (1/2π²) (-1)^{ℓ''}/(ℓ''+½) e^{-i(a-b)φ},
 *              ℓ'' = (a+b-1)/2 − ℓ.
 *
 * Normalization facts used throughout (fixed by the |ℓ₀⟩⟨ℓ₀| case and
 * cross-asserted in the tests): Tr w = 1/2π, ∫w(ℓ₀,φ)dφ = |ℓ₀⟩⟨ℓ₀|, and
 * both the inverse map and the traciality pairing carry the constant 2π.
 */

inline constexpr double kInverseMapConstant = kTwoPi;   // c in ϱ = c Σ∫ w W
inline constexpr double kTracialityConstant = kTwoPi;   // Tr(ϱ₁ϱ₂) = 2π Σ∫ W₁W₂
static_assert(kInverseMapConstant == kTracialityConstant);

inline constexpr double kRealityTol = 1e-12;   // max |Im W| tolerated before discarding

// Phase-space point (ℓ, φ) with φ reduced into [-π, π).
struct PhasePoint {
    int l = 0;
    double phi = 0.0;
    PhasePoint(int ll, double p) : l(ll), phi(reduce_angle(p)) {}
};

// Uniform angle samples φ_j = -π + 2πj/nphi over a window.  The floor
// nphi ≥ 4·dim + 2 makes the periodic trapezoid (= DFT) rule exact for
// every trigonometric polynomial appearing in W over the window.
struct CylinderGrid {
    LWindow window;
    int nphi = 0;

    CylinderGrid(LWindow w, int n);
    double phi(int j) const { return -kPi + kTwoPi * j / nphi; }
    double step() const { return kTwoPi / nphi; }
    bool operator==(const CylinderGrid&) const = default;
};

// Real samples W(ℓ, φ_j), dim × nphi.
struct WignerField {
    CylinderGrid grid;
    Eigen::MatrixXd values;

    WignerField(CylinderGrid g, Eigen::MatrixXd v);
    double at(int l, int j) const { return values(grid.window.index(l), j); }
};

// D(ℓ,φ) as a finite section; unitary away from the edges, D(0,0) = 𝟙.
Operator displacement(const LWindow& w, int l, double phi);

// Closed-form ⟨a| w(ℓ,φ) |b⟩; never materializes the defining double sum.
Complex kernel_element(int l, double phi, int a, int b);

// Kernel matrix over the window at one phase-space point (Hermitian).
Operator kernel_matrix(const LWindow& w, const PhasePoint& pt);

/*
 * Quadrature oracle for the kernel, independent of the closed form:
 * integrates (2π)^{-2} Σ_{ℓ'} ∫ e^{-i(ℓ'φ - ℓφ')} D(ℓ',φ') dφ' with the
 * composite trapezoid rule on nquad subintervals of [-π,π], Richardson-
 * extrapolated with the nested nquad/2 rule (the odd sector's integrand
 * is 2π-anti-periodic, so a single trapezoid level converges only
 * O(nquad^{-2})).  ℓ' runs over every shift representable in the window.
 * Requires nquad even and ≥ 4·dim + 2.
 */
Operator kernel_oracle(const LWindow& w, const PhasePoint& pt, int nquad);

// W(ℓ,φ_j) = Tr[ϱ w(ℓ,φ_j)] over the grid.  Asserts max |Im| < kRealityTol
// before discarding imaginary parts.  Each grid point is computed
// independently; results are bit-identical for any thread count.
WignerField wigner_map(const DensityMatrix& rho, const CylinderGrid& grid, int threads = 1);

struct InverseResult {
    DensityMatrix rho;
    double constant;   // the even-sector (and traciality) constant, 2π
};

/*
 * Inverse of the window-restricted Wigner map.  Even harmonics of the
 * ring data invert by the literal back-projection ϱ = 2π Σ_ℓ ∫ w W dφ
 * (one ring per matrix element, constant fixed by the |ℓ₀⟩ case).  Odd
 * harmonics couple all rings through the 1/(ℓ''+½) tail, whose window
 * truncation decays too slowly to back-project at tolerance; they are
 * recovered exactly by solving the per-diagonal linear systems the
 * closed-form kernel induces on the ring data (well-conditioned,
 * condition number < 1.5).
 */
InverseResult inverse_map(const WignerField& field);

struct Marginals {
    Eigen::VectorXd p_l;     // P(ℓ) = ∫ W dφ       (quadrature, exact)
    Eigen::VectorXd p_phi;   // P(φ_j) = Σ_ℓ W(ℓ,φ_j) over the window rings
};

Marginals marginals(const WignerField& field);

// Σ_ℓ ∫ W dφ; equals Tr ϱ for window-supported states.
double field_normalization(const WignerField& field);

/*
 * Traciality pairing 2π Σ_ℓ ∫ W₁ W₂ dφ = Tr(ϱ₁ϱ₂).  The even sector is
 * the literal grid quadrature (trigonometrically exact); the odd sector's
 * ℓ-series extends over all of ℤ and is resummed exactly from the same
 * per-diagonal ring-data solves as inverse_map.
 */
double overlap(const WignerField& f1, const WignerField& f2);

/*
 * max over comparable grid points of |W_{DϱD†}(ℓ,φ) − W_ϱ(ℓ-ℓ₀, φ-φ₀)|.
 * φ₀ must be grid-aligned; rings with ℓ-ℓ₀ outside the window are not
 * compared (the caller keeps displaced support away from the edges).
 */
double covariance_check(const DensityMatrix& rho, const CylinderGrid& grid, int l0, double phi0);

}  // namespace cylwig
