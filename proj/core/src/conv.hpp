#pragma once

#include "parallel.hpp"

#include <cmath>
#include <vector>

// Internal product-integration kernels. Everything reduces to exact moments
// of tau^e over the lag intervals [(k-1)h, kh]; the data is integrated as its
// piecewise-linear interpolant (conv_linear) or as piecewise-constant cell
// data (conv_const).

namespace fraccalc::detail {

struct LagMoments {
  // M0[k] = integral of tau^e     over ((k-1)h, kh)
  // M1[k] = integral of tau^(e+1) over ((k-1)h, kh)
  std::vector<double> M0, M1;
};

inline LagMoments lag_moments(int n, double h, double e) {
  double s0 = e + 1.0, s1 = e + 2.0; // both > 0 for e > -1
  std::vector<double> P0(n + 1), P1(n + 1);
  for (int k = 0; k <= n; ++k) {
    double kh = k * h;
    P0[k] = std::pow(kh, s0);
    P1[k] = std::pow(kh, s1);
  }
  LagMoments m;
  m.M0.resize(n + 1);
  m.M1.resize(n + 1);
  m.M0[0] = m.M1[0] = 0.0;
  for (int k = 1; k <= n; ++k) {
    m.M0[k] = (P0[k] - P0[k - 1]) / s0;
    m.M1[k] = (P1[k] - P1[k - 1]) / s1;
  }
  return m;
}

// out[j] = sum_{i<j} int_{x_i}^{x_{i+1}} (u_i + m_i (t - x_i)) (x_j - t)^e dt
inline std::vector<double> conv_linear(const std::vector<double>& u, double h,
                                       double e) {
  int n = (int)u.size() - 1;
  auto lm = lag_moments(n, h, e);
  std::vector<double> out(n + 1, 0.0);
  parallel_for(n + 1, [&](int j) {
    double acc = 0.0;
    for (int i = 0; i < j; ++i) {
      int k = j - i;
      double mi = (u[i + 1] - u[i]) / h;
      // with tau = x_j - t: t - x_i = kh - tau
      acc += u[i] * lm.M0[k] + mi * (k * h * lm.M0[k] - lm.M1[k]);
    }
    out[j] = acc;
  });
  return out;
}

// out[j] = sum_{i<j} c_i * integral of tau^e over the lag interval
inline std::vector<double> conv_const(const std::vector<double>& c, double h,
                                      double e) {
  int n = (int)c.size();
  auto lm = lag_moments(n, h, e);
  std::vector<double> out(n + 1, 0.0);
  parallel_for(n + 1, [&](int j) {
    double acc = 0.0;
    for (int i = 0; i < j; ++i)
      acc += c[i] * lm.M0[j - i];
    out[j] = acc;
  });
  return out;
}

} // namespace fraccalc::detail
