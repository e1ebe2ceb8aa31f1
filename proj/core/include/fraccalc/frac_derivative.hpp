#pragma once

#include "fraccalc/frac_integral.hpp"
#include "fraccalc/grid.hpp"

namespace fraccalc {

enum class DerivKind { RiemannLiouville, Caputo, Marchaud };

// Fractional derivative of order s of the piecewise-linear interpolant of u.
//   Caputo:           I^(1-s)[u'] with the per-cell slopes (L1 scheme, exact
//                     kernel moments). Throws for data carrying a singular
//                     component with mu <= 1 (u' not integrable).
//   RiemannLiouville: Caputo + u(a) (x-a)^(-s)/Gamma(1-s); singular
//                     components go through the exact power rule. The node at
//                     x = a is reported as an adjacent half-cell average and
//                     flagged.
//   Marchaud:         direct singular-integral form, exact moments for the
//                     interpolant; identical to RiemannLiouville on the
//                     interpolant by construction.
// The output of RL/Marchaud carries the boundary and power-rule terms as
// singularity metadata, so a following frac_int round-trips them exactly.
GridFunction frac_deriv(const GridFunction& u, FracOrder s, DerivKind kind,
                        Side side = Side::LeftAPlus);

// (I^(k-s)[u])^(j) for k-1 < s < k, k in {2,3}, 0 <= j <= k, for data whose
// derivatives up to order k-1 vanish at a. `uk` holds samples of u^(k);
// the boundary terms of the representation vanish under the precondition.
// j = k reduces to I^(k-s)[u^(k)].
GridFunction higher_frac_int(const GridFunction& uk, int k, double s, int j);

// constant d_{j,k,s} = Gamma(k-s)/Gamma(2k-s-j) of the higher-order
// representation, re-derived from the product form; d_{k,k,s} = 1
double higher_rep_constant(int j, int k, double s);

} // namespace fraccalc
