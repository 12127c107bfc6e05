#pragma once

#include "cylwig/cylinder.hpp"
#include "cylwig/lattice.hpp"

namespace cylwig {

/*
 * Example states and their closed-form Wigner functions.  The analytic
 * evaluators below are independent of the matrix path (kernel_matrix /
 * wigner_map) and serve as its cross-check.
 */

// Cylinder coherent-state label (ℓ₀, φ₀).
struct CoherentLabel {
    int l0 = 0;
    double phi0 = 0.0;
    CoherentLabel(int l, double p) : l0(l), phi0(reduce_angle(p)) {}
};

// Two-eigenstate superposition (|ℓ₁⟩ + e^{iφ₀}|ℓ₂⟩)/√2.
struct SuperpositionLabel {
    int l1 = 0;
    int l2 = 0;
    double phi0 = 0.0;
    SuperpositionLabel(int a, int b, double p);
};

/*
 * ⟨ℓ|ℓ₀,φ₀⟩ = θ₃(0|1/e)^{-1/2} e^{-iℓφ₀} e^{-(ℓ-ℓ₀)²/2}.
 * Requires the window to cover ℓ₀ ± 6 so the edge mass stays below 1e-15.
 */
StateVector coherent_state(const LWindow& w, const CoherentLabel& label);

StateVector superposition_state(const LWindow& w, const SuperpositionLabel& label);

// W_{|ℓ₀⟩}(ℓ,φ) = δ_{ℓ,ℓ₀}/2π
double analytic_wigner_lstate(int l0, const PhasePoint& pt);

/*
 * W_{|φ₀⟩}(ℓ,φ) = δ_{2π}(φ-φ₀)/2π.  The Dirac comb is never represented
 * as a float: sampling on the comb returns the tagged descriptor, off the
 * comb the value is exactly 0.  |φ₀⟩ itself is not normalizable (the
 * phase-space integral diverges).
 */
struct AngleWignerSample {
    bool on_comb = false;
    double comb_location = 0.0;   // φ₀ (reduced)
    double comb_weight = 0.0;     // 1/2π
    double value = 0.0;           // 0 off the comb
};
inline constexpr bool kAngleStateNormalizable = false;

AngleWignerSample analytic_wigner_anglestate(double phi0, const PhasePoint& pt);

/*
 * Coherent-state Wigner function, even + odd closed form:
 *   W⁺ = e^{-(ℓ-ℓ₀)²} θ₃(φ-φ₀ | 1/e) / (2π θ₃(0|1/e))
 *   W⁻ = Re{ e^{i(φ-φ₀)-1/2}/(2π² θ₃(0|1/e)) · θ₃(φ-φ₀+i/2 | 1/e)
 *            · Σ_{ℓ'} (-1)^{ℓ'-ℓ+ℓ₀} e^{-ℓ'²-ℓ'} / (ℓ'+ℓ₀-ℓ+½) }
 * The total is real; the evaluator throws if the imaginary residue
 * reaches 1e-10 instead of silently discarding it.
 */
double analytic_wigner_coherent(const CoherentLabel& label, const PhasePoint& pt);

struct CoherentWignerParts {
    double even;
    double odd;
};
CoherentWignerParts analytic_wigner_coherent_parts(const CoherentLabel& label,
                                                   const PhasePoint& pt);

/*
 * Superposition Wigner function:
 *   W⁺ = (1/4π){δ_{ℓ,ℓ₁} + δ_{ℓ,ℓ₂} + 2 δ_{ℓ₁+ℓ₂,2ℓ} cos[φ₀+(ℓ₂-ℓ₁)φ]}
 *   W⁻ = (1/π²) cos[φ₀+(ℓ₂-ℓ₁)φ] (-1)^{ℓ+(ℓ₁+ℓ₂-1)/2}/(ℓ₁+ℓ₂-2ℓ)
 *        when ℓ₁+ℓ₂ is odd, else 0.
 */
double analytic_wigner_superposition(const SuperpositionLabel& label, const PhasePoint& pt);

}  // namespace cylwig
