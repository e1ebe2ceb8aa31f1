#pragma once

namespace fraccalc {

// Euler Gamma on (0, inf). Relative error <= 1e-12. Throws std::domain_error
// for x <= 0.
double gamma_fn(double x);

// 1/Gamma(x), entire. Zero at x = 0, -1, -2, ... which is exactly what the
// fractional power rule needs (the coefficient of a derivative of order mu-s
// vanishes when mu = s).
double rgamma(double x);

// Euler Beta, beta(p, q) = Gamma(p)Gamma(q)/Gamma(p+q). Requires p, q > 0.
double beta_fn(double p, double q);

} // namespace fraccalc
