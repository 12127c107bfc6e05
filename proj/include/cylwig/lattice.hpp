#pragma once

#include <utility>

#include <Eigen/Dense>

#include "cylwig/common.hpp"

namespace cylwig {

/*
 * Truncated angular-momentum representation.
 *
 * The ladder label ℓ runs over all of ℤ; every matrix here is the finite
 * section of an infinite operator on the window ℓ ∈ [lmin, lmax].  The
 * shift Ê (Ê|ℓ⟩ = |ℓ-1⟩) is an isometry only away from the window edges,
 * so structural identities built from it hold on entries at distance
 * ≥ margin from the edge; identities involving only the diagonal L̂
 * ([Ê,L̂] = Ê, the Weyl relation) hold on every entry.
 */

// validation tolerances
inline constexpr double kNormTol = 1e-9;        // |‖ψ‖² − 1| for normalized states
inline constexpr double kHermitianTol = 1e-9;   // ‖ϱ − ϱ†‖_max
inline constexpr double kPsdTol = 1e-9;         // eigenvalue floor −tol
inline constexpr double kTailBudget = 1e-12;    // edge mass allowed by state builders

struct LWindow {
    int lmin = 0;
    int lmax = 0;

    LWindow(int lo, int hi);

    int dim() const { return lmax - lmin + 1; }
    bool contains(int l) const { return l >= lmin && l <= lmax; }
    int index(int l) const;                      // idx(ℓ) = ℓ − lmin, checked
    int level(int idx) const { return lmin + idx; }

    bool operator==(const LWindow&) const = default;
};

// Window-tagged matrix carrier for E, L, C, S, D, w.
struct Operator {
    LWindow window;
    Eigen::MatrixXcd mat;

    Operator(LWindow w, Eigen::MatrixXcd m);
    static Operator identity(LWindow w);
    Operator adjoint() const { return Operator(window, mat.adjoint()); }
};

void require_same_window(const LWindow& a, const LWindow& b);

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(Complex c, const Operator& a);
inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

// ℓ-basis amplitudes ⟨ℓ|ψ⟩ over a window.
struct StateVector {
    LWindow window;
    Eigen::VectorXcd amp;
    bool normalized = true;

    // validates Σ|amp|² = 1 to kNormTol
    StateVector(LWindow w, Eigen::VectorXcd a);
    // explicitly flagged non-normalized carrier
    static StateVector unnormalized(LWindow w, Eigen::VectorXcd a);

    double norm_sq() const { return amp.squaredNorm(); }
    // truncation-error report: |amp(lmin)|² + |amp(lmax)|²
    double tail_mass() const;
};

// ϱ_{ℓℓ'} = ⟨ℓ|ϱ|ℓ'⟩ over a window.
struct DensityMatrix {
    LWindow window;
    Eigen::MatrixXcd mat;

    // validates Hermiticity, unit trace, positive semidefiniteness
    static DensityMatrix physical(LWindow w, Eigen::MatrixXcd m);
    static DensityMatrix from_state(const StateVector& psi);
    // carrier without physicality validation (reconstruction output)
    static DensityMatrix unchecked(LWindow w, Eigen::MatrixXcd m);

  private:
    DensityMatrix(LWindow w, Eigen::MatrixXcd m) : window(w), mat(std::move(m)) {}
};

// Ê with ⟨ℓ-1|Ê|ℓ⟩ = 1; sub-unitary at the truncation edge.
Operator shift_op(const LWindow& w);

// Ê^k assembled from ⟨a|Ê^k|b⟩ = δ_{a,b-k} (either sign of k); equals the
// matrix power of the finite section exactly.
Operator shift_power(const LWindow& w, int k);

// L̂ = diag(ℓ)
Operator angmom_op(const LWindow& w);

// Ĉ = (Ê+Ê†)/2, Ŝ = (Ê−Ê†)/2i; [Ĉ,Ŝ] = 0 away from the edges.
std::pair<Operator, Operator> euler_ops(const LWindow& w);

// e^{-iφL̂} = diag(e^{-iφℓ})
Operator rotation(const LWindow& w, double phi);

/*
 * ⟨φ|ψ⟩ = (2π)^{-1/2} Σ_ℓ e^{iℓφ} ⟨ℓ|ψ⟩, i.e. ⟨φ|ℓ⟩ = e^{iℓφ}/√(2π).
 * With this orientation the angle marginal of the Wigner map is exactly
 * |⟨φ|ψ⟩|² and the coherent state |ℓ₀,φ₀⟩ peaks at φ = φ₀.
 */
Complex angle_amplitude(const StateVector& psi, double phi);

}  // namespace cylwig
