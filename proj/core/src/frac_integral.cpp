#include "fraccalc/frac_integral.hpp"

#include "fraccalc/special.hpp"
#include "conv.hpp"
#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraccalc {

GridFunction reflect(const GridFunction& u) {
  GridFunction out(u.grid);
  out.policy = u.policy;
  int n = u.grid.n;
  for (int j = 0; j <= n; ++j)
    out.values[j] = u.values[n - j];
  return out;
}

namespace {

GridFunction frac_int_left(const GridFunction& u, double s) {
  const Grid& g = u.grid;
  double h = g.h();
  double inv_gamma_s = 1.0 / gamma_fn(s);

  auto reg = u.regular_values();
  auto conv = detail::conv_linear(reg, h, s - 1.0);

  GridFunction out(g);
  out.policy = u.policy;
  for (int j = 0; j <= g.n; ++j)
    out.values[j] = conv[j] * inv_gamma_s;

  // exact power rule for the recorded singular components:
  // I^s[c (x-a)^(mu-1)] = c Gamma(mu)/Gamma(mu+s) (x-a)^(mu+s-1)
  for (const auto& t : u.singular)
    add_singular(out, {t.coeff * gamma_fn(t.mu) / gamma_fn(t.mu + s),
                       t.mu + s});
  return out;
}

} // namespace

GridFunction frac_int(const GridFunction& u, FracOrder s, Side side) {
  if (side == Side::LeftAPlus)
    return frac_int_left(u, s);
  GridFunction mirrored = frac_int_left(reflect(u), s);
  return reflect(mirrored);
}

namespace {

// local integrability exponent of f at a breakpoint: f ~ C (x-p)^(mu-1)
double strength_at(const AnalyticFunction& f, double p, const Interval& iv) {
  switch (f.tag) {
  case FnTag::PowerLaw:
    return p == iv.a ? f.p1 : 1.0;
  case FnTag::CriticalPower:
    return p == iv.a ? f.p1 : 1.0;
  case FnTag::ShiftedCriticalPower:
    return p == f.p1 ? f.p3 : 1.0;
  case FnTag::LogKernelRight:
    return p == iv.b ? 1.0 - f.p1 : 1.0;
  default:
    return 1.0; // bounded (jumps handled by splitting)
  }
}

} // namespace

double frac_int_oracle(const AnalyticFunction& f, FracOrder s, Side side,
                       double x, const Interval& iv) {
  if (!(x > iv.a && x < iv.b))
    throw std::domain_error("frac_int_oracle: x must be interior");
  const double tol = 1e-11;
  double inv_gamma_s = 1.0 / gamma_fn(s);
  // for the right side, work with distance from x; sign = +1 means the domain
  // is (x, b] and the kernel is (t-x)^(s-1)
  bool left = (side == Side::LeftAPlus);
  double lo = left ? iv.a : x;
  double hi = left ? x : iv.b;

  std::vector<double> pts{lo, hi};
  for (double b : f.breakpoints(iv))
    if (b > lo && b < hi)
      pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // ensure no piece has the kernel endpoint x and an f-singularity together
  std::vector<std::pair<double, double>> pieces;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double l = pts[i], r = pts[i + 1];
    bool kernel_end = left ? (r == x) : (l == x);
    bool f_sing_l = strength_at(f, l, iv) < 1.0 ||
                    (f.tag == FnTag::LogKernelLeft && l == iv.a);
    bool f_sing_r = strength_at(f, r, iv) < 1.0;
    if (kernel_end && (left ? f_sing_l : f_sing_r)) {
      double m = 0.5 * (l + r);
      pieces.push_back({l, m});
      pieces.push_back({m, r});
    } else {
      pieces.push_back({l, r});
    }
  }

  auto kernel = [&](double t) {
    return std::pow(std::abs(x - t), (double)s - 1.0);
  };
  auto integrand = [&](double t) { return f.eval(t, iv) * kernel(t); };

  double total = 0.0;
  for (auto [l, r] : pieces) {
    if (!(r > l))
      continue;
    bool kernel_end = left ? (r == x) : (l == x);
    if (kernel_end) {
      // t = x -+ tau^(1/s): the kernel factor cancels exactly
      double len = r - l;
      double inv = 1.0 / (double)s;
      auto g = [&](double tau) {
        double t = left ? x - std::pow(tau, inv) : x + std::pow(tau, inv);
        // pow round-off can push t a few ulps past the piece boundary
        t = std::clamp(t, l, r);
        return f.eval(t, iv) / (double)s;
      };
      total += detail::adaptive_simpson(g, 0.0, std::pow(len, (double)s), tol);
      continue;
    }
    if (f.tag == FnTag::LogKernelLeft && l == iv.a) {
      // w = -log((t-a)/L): numeric on w <= 40, closed-form tail with the
      // kernel frozen at a (t - a < 4e-18 L there)
      double L = iv.length();
      double beta = f.p1;
      double w_lo = -std::log((r - iv.a) / L);
      double W = 40.0;
      auto g = [&](double w) {
        double t = iv.a + L * std::exp(-w);
        return L * kernel(t) / std::pow(w, beta);
      };
      total += detail::adaptive_simpson(g, w_lo, W, tol);
      total += kernel(iv.a) * L * std::pow(W, 1.0 - beta) / (beta - 1.0);
      continue;
    }
    double mu_l = strength_at(f, l, iv);
    double mu_r = strength_at(f, r, iv);
    if (mu_l < 1.0)
      total += detail::integrate_power_singular(integrand, l, r, l, mu_l, tol);
    else if (mu_r < 1.0)
      total += detail::integrate_power_singular(integrand, l, r, r, mu_r, tol);
    else
      total += detail::adaptive_simpson(integrand, l, r, tol);
  }
  return total * inv_gamma_s;
}

} // namespace fraccalc
