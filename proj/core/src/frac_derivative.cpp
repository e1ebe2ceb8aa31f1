#include "fraccalc/frac_derivative.hpp"

#include "fraccalc/special.hpp"
#include "conv.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccalc {

namespace {

std::vector<double> slopes_of(const std::vector<double>& v, double h) {
  std::vector<double> m(v.size() - 1);
  for (size_t i = 0; i + 1 < v.size(); ++i)
    m[i] = (v[i + 1] - v[i]) / h;
  return m;
}

// images of the recorded power components under D^s; requires mu >= s
// (otherwise the image is not locally integrable)
std::vector<SingularTerm> power_rule_images(const GridFunction& u, double s) {
  std::vector<SingularTerm> out;
  for (const auto& t : u.singular) {
    if (t.mu < s - 1e-14)
      throw std::domain_error(
          "frac_deriv: singular component of order below s is not representable");
    // D^s[c (x-a)^(mu-1)] = c Gamma(mu)/Gamma(mu-s) (x-a)^(mu-s-1);
    // 1/Gamma(0) = 0 kills the critical case mu = s exactly
    out.push_back({t.coeff * gamma_fn(t.mu) * rgamma(t.mu - s), t.mu - s});
  }
  return out;
}

GridFunction caputo_left(const GridFunction& u, double s) {
  for (const auto& t : u.singular)
    if (t.mu <= 1.0 && t.coeff != 0.0)
      throw std::domain_error(
          "frac_deriv: Caputo derivative of singular data is not well defined");
  const Grid& g = u.grid;
  double h = g.h();
  auto m = slopes_of(u.values, h);
  auto conv = detail::conv_const(m, h, -s);
  GridFunction out(g);
  out.policy = u.policy;
  double c = 1.0 / gamma_fn(1.0 - s);
  for (int j = 0; j <= g.n; ++j)
    out.values[j] = conv[j] * c;
  return out;
}

GridFunction rl_left(const GridFunction& u, double s) {
  const Grid& g = u.grid;
  double h = g.h();
  auto reg = u.regular_values();
  auto conv = detail::conv_const(slopes_of(reg, h), h, -s);
  GridFunction out(g);
  out.policy = u.policy;
  double c = 1.0 / gamma_fn(1.0 - s);
  for (int j = 0; j <= g.n; ++j)
    out.values[j] = conv[j] * c;

  double u_a = reg[0];
  add_singular(out, {u_a * c, 1.0 - s});
  for (const auto& img : power_rule_images(u, s))
    add_singular(out, img);
  return out;
}

GridFunction marchaud_left(const GridFunction& u, double s) {
  const Grid& g = u.grid;
  int n = g.n;
  double h = g.h();
  double c = 1.0 / gamma_fn(1.0 - s);
  auto reg = u.regular_values();
  auto m = slopes_of(reg, h);

  // lag moments of tau^(-s-1) and tau^(-s); N0 undefined at lag 1 but the
  // adjacent cell's constant part vanishes identically there
  std::vector<double> N0(n + 1, 0.0), N1(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double d0 = k * h, d1 = (k - 1) * h;
    if (k > 1)
      N0[k] = (std::pow(d1, -s) - std::pow(d0, -s)) / s;
    N1[k] = (std::pow(d0, 1.0 - s) - std::pow(d1, 1.0 - s)) / (1.0 - s);
  }

  GridFunction out(g);
  out.policy = u.policy;
  detail::parallel_for(n, [&](int idx) {
    int j = idx + 1;
    double x = g.node(j), a = g.interval.a;
    double acc = reg[j] * std::pow(x - a, -s); // u(x)/(x-a)^s term, s-scaled below
    double diff = 0.0;
    for (int i = 0; i < j; ++i) {
      int k = j - i;
      if (k == 1) {
        diff += m[i] * N1[1];
      } else {
        double A = reg[j] - (reg[i] + m[i] * k * h);
        diff += A * N0[k] + m[i] * N1[k];
      }
    }
    out.values[j] = c * (acc + s * diff);
  });

  // the u(x)/(x-a)^s term already carries the u(a)(x-a)^(-s) profile; move
  // that share into metadata (identical nodal values for j >= 1) so the
  // output matches the RL convention, including the flagged node at a
  double u_a = reg[0];
  for (int j = 1; j <= n; ++j)
    out.values[j] -= u_a * c * std::pow(g.node(j) - g.interval.a, -s);
  add_singular(out, {u_a * c, 1.0 - s});
  for (const auto& img : power_rule_images(u, s))
    add_singular(out, img);
  return out;
}

} // namespace

GridFunction frac_deriv(const GridFunction& u, FracOrder s, DerivKind kind,
                        Side side) {
  auto run_left = [&](const GridFunction& v) {
    switch (kind) {
    case DerivKind::Caputo:
      return caputo_left(v, s);
    case DerivKind::RiemannLiouville:
      return rl_left(v, s);
    case DerivKind::Marchaud:
      return marchaud_left(v, s);
    }
    throw std::logic_error("frac_deriv: bad kind");
  };
  if (side == Side::LeftAPlus)
    return run_left(u);
  return reflect(run_left(reflect(u)));
}

double higher_rep_constant(int j, int k, double s) {
  return gamma_fn(k - s) * rgamma(2.0 * k - s - j);
}

GridFunction higher_frac_int(const GridFunction& uk, int k, double s, int j) {
  if (k < 2 || k > 3)
    throw std::invalid_argument("higher_frac_int: k in {2,3}");
  if (!(s > k - 1 && s < k))
    throw std::invalid_argument("higher_frac_int: need k-1 < s < k");
  if (j < 0 || j > k)
    throw std::invalid_argument("higher_frac_int: j in [0,k]");
  double e = 2.0 * k - s - 1.0 - j; // > k-1-s > -1
  auto conv = detail::conv_linear(uk.values, uk.grid.h(), e);
  GridFunction out(uk.grid);
  out.policy = uk.policy;
  // d_{j,k,s}/Gamma(k-s) = 1/Gamma(2k-s-j)
  double c = rgamma(2.0 * k - s - j);
  for (int i = 0; i <= uk.grid.n; ++i)
    out.values[i] = conv[i] * c;
  return out;
}

} // namespace fraccalc
