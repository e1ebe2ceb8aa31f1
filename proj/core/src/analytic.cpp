#include "fraccalc/analytic.hpp"

#include "fraccalc/special.hpp"
#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fraccalc {

namespace {
double clip_overlap(double lo, double hi, double c, double d, double& l,
                    double& r) {
  l = std::max(lo, c);
  r = std::min(hi, d);
  return r > l ? r - l : 0.0;
}
} // namespace

AnalyticFunction AnalyticFunction::zero() { return {FnTag::Zero}; }
AnalyticFunction AnalyticFunction::constant(double c) {
  return {FnTag::Constant, c};
}
AnalyticFunction AnalyticFunction::power_law(double mu) {
  if (!(mu > 0.0))
    throw std::invalid_argument("power_law: mu must be positive");
  return {FnTag::PowerLaw, mu};
}
AnalyticFunction AnalyticFunction::critical_power(double s0) {
  if (!(s0 > 0.0 && s0 < 1.0))
    throw std::invalid_argument("critical_power: s0 in (0,1)");
  return {FnTag::CriticalPower, s0};
}
AnalyticFunction AnalyticFunction::shifted_critical_power(double c, double d,
                                                          double s0) {
  if (!(c < d) || !(s0 > 0.0 && s0 < 1.0))
    throw std::invalid_argument("shifted_critical_power: need c < d, s0 in (0,1)");
  return {FnTag::ShiftedCriticalPower, c, d, s0};
}
AnalyticFunction AnalyticFunction::indicator(double c, double d) {
  if (!(c < d))
    throw std::invalid_argument("indicator: need c < d");
  return {FnTag::Indicator, c, d};
}
AnalyticFunction AnalyticFunction::cosine() { return {FnTag::Cosine}; }
AnalyticFunction AnalyticFunction::log_kernel_left(double beta) {
  if (!(beta > 1.0))
    throw std::invalid_argument("log_kernel_left: beta > 1 required for integrability");
  return {FnTag::LogKernelLeft, beta};
}
AnalyticFunction AnalyticFunction::log_kernel_right(double s0) {
  if (!(s0 > 0.0 && s0 < 1.0))
    throw std::invalid_argument("log_kernel_right: s0 in (0,1)");
  return {FnTag::LogKernelRight, s0};
}
AnalyticFunction AnalyticFunction::cantor_stage(int m) {
  if (m < 0 || m > 30)
    throw std::invalid_argument("cantor_stage: m in [0,30]");
  AnalyticFunction f{FnTag::CantorStage};
  f.stage = m;
  return f;
}
AnalyticFunction AnalyticFunction::linear() { return {FnTag::Linear}; }
AnalyticFunction AnalyticFunction::sine() { return {FnTag::Sine}; }
AnalyticFunction AnalyticFunction::hat(double c, double halfwidth) {
  if (!(halfwidth > 0.0))
    throw std::invalid_argument("hat: halfwidth must be positive");
  return {FnTag::Hat, c, halfwidth};
}

double cantor_fn(double y, int m) {
  y = std::clamp(y, 0.0, 1.0);
  double base = 0.0, scale = 1.0;
  for (int i = 0; i < m; ++i) {
    if (y < 1.0 / 3.0) {
      y *= 3.0;
      scale *= 0.5;
    } else if (y > 2.0 / 3.0) {
      y = 3.0 * y - 2.0;
      base += 0.5 * scale;
      scale *= 0.5;
    } else {
      return base + 0.5 * scale;
    }
  }
  return base + scale * y; // remaining stage is the identity
}

double AnalyticFunction::eval(double x, const Interval& iv) const {
  double L = iv.length();
  double xi = x - iv.a;
  switch (tag) {
  case FnTag::Zero:
    return 0.0;
  case FnTag::Constant:
    return p1;
  case FnTag::PowerLaw:
    return std::pow(xi, p1 - 1.0);
  case FnTag::CriticalPower:
    return std::pow(xi, p1 - 1.0) / gamma_fn(p1);
  case FnTag::ShiftedCriticalPower:
    if (x > p1 && x <= p2)
      return std::pow(x - p1, p3 - 1.0) / gamma_fn(p3);
    return 0.0;
  case FnTag::Indicator:
    return (x > p1 && x < p2) ? 1.0 : 0.0;
  case FnTag::Cosine:
    return std::cos(x);
  case FnTag::Sine:
    return std::sin(x);
  case FnTag::LogKernelLeft: {
    double y = xi / L;
    if (y <= 0.0 || y > 0.5)
      return y <= 0.0 ? INFINITY : 0.0;
    return 1.0 / (y * std::pow(-std::log(y), p1));
  }
  case FnTag::LogKernelRight: {
    double z = (iv.b - x) / L;
    if (z <= 0.0 || z > 0.5)
      return z <= 0.0 ? INFINITY : 0.0;
    return 1.0 / (std::pow(z, p1) * (-std::log(z)));
  }
  case FnTag::CantorStage:
    return cantor_fn(xi / L, stage);
  case FnTag::Linear:
    return xi;
  case FnTag::Hat:
    return std::max(0.0, 1.0 - std::abs(x - p1) / p2);
  }
  return 0.0;
}

std::vector<double> AnalyticFunction::breakpoints(const Interval& iv) const {
  double L = iv.length();
  switch (tag) {
  case FnTag::PowerLaw:
    return p1 < 1.0 ? std::vector<double>{iv.a} : std::vector<double>{};
  case FnTag::CriticalPower:
    return {iv.a};
  case FnTag::ShiftedCriticalPower:
    return {p1, p2};
  case FnTag::Indicator:
    return {p1, p2};
  case FnTag::LogKernelLeft:
    return {iv.a, iv.a + 0.5 * L};
  case FnTag::LogKernelRight:
    return {iv.a + 0.5 * L, iv.b};
  default:
    return {};
  }
}

double AnalyticFunction::integral(double lo, double hi, const Interval& iv) const {
  if (!(hi > lo))
    return 0.0;
  double L = iv.length();
  switch (tag) {
  case FnTag::Zero:
    return 0.0;
  case FnTag::Constant:
    return p1 * (hi - lo);
  case FnTag::PowerLaw:
    return (std::pow(hi - iv.a, p1) - std::pow(lo - iv.a, p1)) / p1;
  case FnTag::CriticalPower:
    return (std::pow(hi - iv.a, p1) - std::pow(lo - iv.a, p1)) /
           (p1 * gamma_fn(p1));
  case FnTag::ShiftedCriticalPower: {
    double l, r;
    if (clip_overlap(lo, hi, p1, p2, l, r) == 0.0)
      return 0.0;
    return (std::pow(r - p1, p3) - std::pow(l - p1, p3)) /
           (p3 * gamma_fn(p3));
  }
  case FnTag::Indicator: {
    double l, r;
    return clip_overlap(lo, hi, p1, p2, l, r);
  }
  case FnTag::Cosine:
    return std::sin(hi) - std::sin(lo);
  case FnTag::Sine:
    return std::cos(lo) - std::cos(hi);
  case FnTag::LogKernelLeft: {
    double l, r;
    if (clip_overlap(lo, hi, iv.a, iv.a + 0.5 * L, l, r) == 0.0)
      return 0.0;
    // primitive of 1/(y (-log y)^beta) dy is (-log y)^(1-beta)/(beta-1)
    auto F = [&](double x) {
      double y = (x - iv.a) / L;
      return std::pow(-std::log(y), 1.0 - p1) / (p1 - 1.0);
    };
    return L * (F(r) - (l > iv.a ? F(l) : 0.0));
  }
  case FnTag::LogKernelRight: {
    double l, r;
    if (clip_overlap(lo, hi, iv.a + 0.5 * L, iv.b, l, r) == 0.0)
      return 0.0;
    auto f = [&](double x) { return eval(x, iv); };
    return detail::integrate_power_singular(f, l, r, iv.b, 1.0 - p1, 1e-13);
  }
  case FnTag::CantorStage: {
    auto f = [&](double x) { return eval(x, iv); };
    return detail::adaptive_simpson(f, lo, hi, 1e-13);
  }
  case FnTag::Linear:
    return 0.5 * ((hi - iv.a) * (hi - iv.a) - (lo - iv.a) * (lo - iv.a));
  case FnTag::Hat: {
    // integrate the piecewise-linear hat exactly
    double total = 0.0;
    double pts[4] = {lo, std::clamp(p1 - p2, lo, hi), std::clamp(p1, lo, hi),
                     std::clamp(p1 + p2, lo, hi)};
    std::vector<double> xs(pts, pts + 4);
    xs.push_back(hi);
    std::sort(xs.begin(), xs.end());
    for (size_t i = 0; i + 1 < xs.size(); ++i)
      total += 0.5 * (eval(xs[i], iv) + eval(xs[i + 1], iv)) *
               (xs[i + 1] - xs[i]);
    return total;
  }
  }
  return 0.0;
}

std::string AnalyticFunction::name() const {
  std::ostringstream os;
  os.precision(12);
  switch (tag) {
  case FnTag::Zero: return "zero";
  case FnTag::Constant: os << "constant:" << p1; break;
  case FnTag::PowerLaw: os << "power-law:" << p1; break;
  case FnTag::CriticalPower: os << "critical-power:" << p1; break;
  case FnTag::ShiftedCriticalPower:
    os << "shifted-critical-power:" << p1 << "," << p2 << "," << p3; break;
  case FnTag::Indicator: os << "indicator:" << p1 << "," << p2; break;
  case FnTag::Cosine: return "cosine";
  case FnTag::Sine: return "sine";
  case FnTag::LogKernelLeft: os << "log-kernel-left:" << p1; break;
  case FnTag::LogKernelRight: os << "log-kernel-right:" << p1; break;
  case FnTag::CantorStage: os << "cantor-stage:" << stage; break;
  case FnTag::Linear: return "linear";
  case FnTag::Hat: os << "hat:" << p1 << "," << p2; break;
  }
  return os.str();
}

GridFunction sample(const AnalyticFunction& f, const Grid& grid,
                    EndpointPolicy policy) {
  const Interval& iv = grid.interval;
  double h = grid.h();
  GridFunction out(grid);
  out.policy = policy;

  auto bps = f.breakpoints(iv);
  for (int j = 0; j <= grid.n; ++j) {
    double x = grid.node(j);
    double lo = std::max(iv.a, x - 0.5 * h);
    double hi = std::min(iv.b, x + 0.5 * h);
    bool near_break = false;
    for (double b : bps)
      if (b >= lo && b <= hi)
        near_break = true;
    double v = near_break ? 0.0 : f.eval(x, iv);
    if (near_break || !std::isfinite(v)) {
      v = f.integral(lo, hi, iv) / (hi - lo);
      out.flag(j, "cell-averaged");
    }
    out.values[j] = v;
  }

  // record the non-interpolable power component for the singular members
  if (f.tag == FnTag::PowerLaw && f.p1 < 1.0)
    out.singular.push_back({1.0, f.p1});
  else if (f.tag == FnTag::CriticalPower)
    out.singular.push_back({1.0 / gamma_fn(f.p1), f.p1});
  return out;
}

GridFunction make_hat(const Grid& grid, double center, double halfwidth) {
  return sample(AnalyticFunction::hat(center, halfwidth), grid,
                EndpointPolicy::Exact);
}

} // namespace fraccalc
