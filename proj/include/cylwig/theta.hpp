#pragma once

#include "cylwig/common.hpp"

namespace cylwig {

/*
 * Third Jacobi theta function, series convention
 *
 *   θ₃(z | q) = Σ_{n∈ℤ} q^{n²} e^{2inz},   0 ≤ q < 1,
 *
 * for complex argument z with |Im z| ≤ 10 (guards e^{2n·Im z} overflow).
 * Terms are paired ±n and accumulated from the largest |n| down to the
 * n = 0 term, so the small terms enter the sum first.  The truncation
 * order N is the smallest one whose tail bound drops below 1e-15 of the
 * partial sum, capped at N = 64 (nomes ≤ 1/e need N ≤ 8).
 *
 * Throws std::invalid_argument for q outside [0,1) or non-finite /
 * out-of-guard z.
 */
Complex theta3(Complex z, double q);

/*
 * Upper bound on the absolute tail |Σ_{|n|>N} q^{n²} e^{2inz}|.
 * Majorant: with r = q^{2N+1} e^{2|Im z|} (requires r < 1),
 *
 *   2 Σ_{k≥1} q^{(N+k)²} e^{2(N+k)|Im z|} ≤ 2 q^{N²} e^{2N|Im z|} · r/(1-r),
 *
 * using q^{2Nk + k²} ≤ (q^{2N+1})^k.  Monotone decreasing in N once
 * N > |Im z|/ln(1/q).  Requires q ∈ (0,1), N ≥ 1.
 */
double theta3_tail_bound(double q, double imz, int N);

}  // namespace cylwig
