#pragma once

#include <utility>

#include <Eigen/Dense>

#include "cylwig/common.hpp"

namespace cylwig {

/*
 * Discrete Wigner formalism on the d×d torus.
 *
 * Generalized Pauli pair: X|n⟩ = |n+1 mod d⟩, Z|n⟩ = ω^n|n⟩ with
 * ω = e^{2πi/d}, obeying ZX = ωXZ.  Displacements
 *
 *   D(k,l) = e^{iφ(k,l)} Z^k X^l,   φ(k,l) = -(2π/d)·2⁻¹·kl,
 *
 * where 2⁻¹ = (d+1)/2 is the integer inverse of 2 mod d for odd d and the
 * literal 1/2 for even d.  The sign of φ is the one that satisfies the
 * conjugation-closure condition φ(k,l)+φ(-k,-l) ≡ -(2π/d)kl, which is what
 * makes D†(k,l) = D(-k,-l), the kernel Hermitian, and w(0,0) the n ↦ -n
 * permutation (up to a constant) at odd prime d.  For d = 2 the half-
 * integer phase keeps D unitary but the parity/overlap identities of odd
 * prime d do not apply (D(1,1) = σ_y; the set {𝟙,Z,X,σ_y} is still closed
 * under †, so Hermiticity, covariance and the round trip survive).
 *
 * Kernel: w(k,l) = (1/d²) Σ_{m,n} ω^{kn-lm} D(m,n).  Under this 1/d²
 * normalization the measured constants are
 *
 *   Tr[w(k,l) w(k',l')] = γ_d δ_{kk'} δ_{ll'},  γ_d = 1/d,
 *   ϱ = c_d Σ_{k,l} W(k,l) w(k,l),             c_d = d,
 *   w(0,0) = (1/d) · (n ↦ -n mod d)            (odd prime d).
 *
 * γ_d and c_d are measured by brute-force oracle at construction rather
 * than trusted from the defining displays, and ship in the metadata.
 */
struct QuditOperator {
    int d = 0;
    Eigen::MatrixXcd mat;

    QuditOperator(int dim, Eigen::MatrixXcd m);
};

struct QuditPhaseSpace {
    int d;
    Complex omega;             // e^{2πi/d}
    double inv2;               // (d+1)/2 for odd d, 0.5 for even d
    double gamma;              // measured overlap constant (= 1/d)
    double inverse_constant;   // measured round-trip constant c_d (= d)

    explicit QuditPhaseSpace(int dim);

    Complex omega_power(long m) const;   // ω^m from the exact reduced table
    double phase(int k, int l) const;    // φ(k,l)
};

// (Z, X): clock and shift, both unitary.
std::pair<QuditOperator, QuditOperator> pauli_ops(int d);

QuditOperator qudit_displacement(const QuditPhaseSpace& space, int k, int l);

// Hermitian, covariant: w(k,l) = D(k,l) w(0,0) D†(k,l).
QuditOperator qudit_kernel(const QuditPhaseSpace& space, int k, int l);

// W(k,l) = Tr[ϱ w(k,l)]; requires Hermitian input, output real d×d.
Eigen::MatrixXd qudit_wigner_map(const QuditOperator& rho, const QuditPhaseSpace& space);

// ϱ = c_d Σ_{k,l} W(k,l) w(k,l) with the measured c_d.
QuditOperator qudit_inverse(const Eigen::MatrixXd& field, const QuditPhaseSpace& space);

}  // namespace cylwig
