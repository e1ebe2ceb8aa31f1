#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

// Internal adaptive quadrature helpers. Not installed.

namespace fraccalc::detail {

// Adaptive Simpson with absolute tolerance. The integrand must be finite on
// the closed interval; singular endpoints are handled by the callers via a
// power substitution first.
inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double lo, double hi, double flo,
                                   double fmid, double fhi, double whole,
                                   double tol, int depth) {
  double mid = 0.5 * (lo + hi);
  double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
  double flm = f(lm), frm = f(rm);
  double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson_rec(f, lo, mid, flo, flm, fmid, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol,
                              depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double lo, double hi, double tol = 1e-12,
                               int depth = 48) {
  if (!(hi > lo))
    return 0.0;
  double mid = 0.5 * (lo + hi);
  double flo = f(lo), fmid = f(mid), fhi = f(hi);
  double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return adaptive_simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, depth);
}

// integral of f over (lo, hi) where f(x) ~ C (x-p)^(mu-1) near the endpoint
// p (p == lo or p == hi), mu > 0. Substitutes |x-p| = tau^(1/mu) so the
// transformed integrand is bounded.
inline double integrate_power_singular(const std::function<double(double)>& f,
                                       double lo, double hi, double p,
                                       double mu, double tol = 1e-12) {
  if (!(hi > lo))
    return 0.0;
  if (mu >= 1.0)
    return adaptive_simpson(f, lo, hi, tol);
  bool at_lo = (p <= lo + 1e-300) || std::abs(p - lo) < std::abs(p - hi);
  double len = hi - lo;
  double inv = 1.0 / mu;
  auto g = [&](double tau) {
    double r = std::pow(tau, inv); // distance from the singular endpoint
    double x = at_lo ? p + r : p - r;
    // pow round-off can push x a few ulps outside (lo, hi)
    x = std::clamp(x, lo, hi);
    double fx = (r == 0.0) ? 0.0 : f(x);
    double w = inv * std::pow(tau, inv - 1.0);
    double val = fx * w;
    return std::isfinite(val) ? val : 0.0;
  };
  return adaptive_simpson(g, 0.0, std::pow(len, mu), tol);
}

} // namespace fraccalc::detail
