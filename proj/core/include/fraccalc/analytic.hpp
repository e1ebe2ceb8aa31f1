#pragma once

#include "fraccalc/grid.hpp"

#include <string>
#include <vector>

namespace fraccalc {

enum class FnTag {
  Zero,
  Constant,             // c
  PowerLaw,             // (x-a)^(mu-1), mu > 0
  CriticalPower,        // (x-a)^(s0-1)/Gamma(s0)
  ShiftedCriticalPower, // chi_(c,d](x) (x-c)^(s0-1)/Gamma(s0)
  Indicator,            // chi_(c,d)
  Cosine,               // cos(x)
  LogKernelLeft,        // chi_{y<=1/2} / (y |log y|^beta), y = (x-a)/(b-a)
  LogKernelRight,       // chi_{y>=1/2} / ((1-y)^s0 |log(1-y)|)
  CantorStage,          // stage-m ternary Cantor function of y
  Linear,               // x - a
  Sine,                 // sin(x)
  Hat,                  // max(0, 1 - |x-c|/w), vanishes at both endpoints
};

struct AnalyticFunction {
  FnTag tag = FnTag::Zero;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  int stage = 0;

  static AnalyticFunction zero();
  static AnalyticFunction constant(double c);
  static AnalyticFunction power_law(double mu);
  static AnalyticFunction critical_power(double s0);
  static AnalyticFunction shifted_critical_power(double c, double d, double s0);
  static AnalyticFunction indicator(double c, double d);
  static AnalyticFunction cosine();
  static AnalyticFunction log_kernel_left(double beta);
  static AnalyticFunction log_kernel_right(double s0);
  static AnalyticFunction cantor_stage(int m);
  static AnalyticFunction linear();
  static AnalyticFunction sine();
  static AnalyticFunction hat(double c, double halfwidth);

  // pointwise value; may be +inf at a singular point
  double eval(double x, const Interval& iv) const;
  // exact integral over (lo, hi) when a closed form exists, adaptive
  // quadrature otherwise
  double integral(double lo, double hi, const Interval& iv) const;
  // points where f is unbounded or jumps (sampling averages around these)
  std::vector<double> breakpoints(const Interval& iv) const;
  std::string name() const;
};

// stage-m ternary Cantor function on [0,1]; C_m is piecewise linear with
// slope (3/2)^m on the 2^m surviving intervals
double cantor_fn(double y, int m);

GridFunction sample(const AnalyticFunction& f, const Grid& grid,
                    EndpointPolicy policy = EndpointPolicy::CellAveraged);

// piecewise-linear hat as grid data (exact: the hat is already pw-linear if
// its kinks land on nodes; otherwise it is the sampled interpolant)
GridFunction make_hat(const Grid& grid, double center, double halfwidth);

} // namespace fraccalc
