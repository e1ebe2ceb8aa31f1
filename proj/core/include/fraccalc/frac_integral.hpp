#pragma once

#include "fraccalc/analytic.hpp"
#include "fraccalc/grid.hpp"

namespace fraccalc {

enum class Side { LeftAPlus, RightBMinus };

// Riemann-Liouville fractional integral of order s of the piecewise-linear
// interpolant of u, exact per cell (product-trapezoidal rule). Left-endpoint
// power components recorded in u.singular are integrated by the exact power
// rule instead; their images are recorded on the output.
GridFunction frac_int(const GridFunction& u, FracOrder s,
                      Side side = Side::LeftAPlus);

// Reference evaluator: adaptive quadrature with the kernel endpoint
// regularized by t = x -+ tau^(1/s) and the integrand's own singularities
// split off. Absolute error target 1e-9.
double frac_int_oracle(const AnalyticFunction& f, FracOrder s, Side side,
                       double x, const Interval& iv);

// u composed with Q(x) = a + b - x (values reversed). Singularity metadata
// is anchored at the left endpoint and is dropped.
GridFunction reflect(const GridFunction& u);

} // namespace fraccalc
