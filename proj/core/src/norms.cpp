#include "fraccalc/norms.hpp"

#include "fraccalc/frac_derivative.hpp"
#include "fraccalc/frac_integral.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fraccalc {

double lp_norm(const GridFunction& u, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p >= 1 required");
  int n = u.grid.n;
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : u.values)
      m = std::max(m, std::abs(v));
    return m;
  }
  double h = u.grid.h();
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    double w = (j == 0 || j == n) ? 0.5 * h : h;
    acc += w * std::pow(std::abs(u.values[j]), p);
  }
  return std::pow(acc, 1.0 / p);
}

double weak_lp_quasinorm(const GridFunction& u, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("weak_lp_quasinorm: p >= 1 required");
  int n = u.grid.n;
  double h = u.grid.h();
  std::vector<std::pair<double, double>> cells; // (|value|, cell measure)
  cells.reserve(n + 1);
  for (int j = 0; j <= n; ++j)
    cells.push_back({std::abs(u.values[j]), (j == 0 || j == n) ? 0.5 * h : h});
  std::sort(cells.begin(), cells.end(),
            [](auto& a, auto& b) { return a.first > b.first; });
  double meas = 0.0, best = 0.0;
  for (size_t k = 0; k < cells.size(); ++k) {
    meas += cells[k].second;
    // level set {|u| >= cells[k].first} has measure `meas` once ties are in
    if (k + 1 < cells.size() && cells[k + 1].first == cells[k].first)
      continue;
    best = std::max(best, cells[k].first * std::pow(meas, 1.0 / p));
  }
  return best;
}

double gagliardo_seminorm_value(const GridFunction& u, FracOrder s, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("gagliardo_seminorm: p >= 1 required");
  int n = u.grid.n;
  double h = u.grid.h();
  double sp = (double)s * p;
  double q = p - sp - 1.0; // > -1 always for sp < 1, p >= 1

  // same-cell band: |u(x)-u(y)| = |m| |x-y| exactly on a cell square
  double diag = 0.0;
  for (int i = 0; i < n; ++i) {
    double m = std::abs(u.values[i + 1] - u.values[i]) / h;
    diag += std::pow(m, p) * 2.0 * std::pow(h, q + 2.0) /
            ((q + 1.0) * (q + 2.0));
  }

  // distinct cell pairs by the midpoint rule, doubled for symmetry
  std::vector<double> mid(n), row(n, 0.0);
  for (int i = 0; i < n; ++i)
    mid[i] = 0.5 * (u.values[i] + u.values[i + 1]);
  detail::parallel_for(n, [&](int i) {
    double acc = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double d = std::abs(mid[i] - mid[j]);
      double r = (j - i) * h;
      acc += std::pow(d, p) * std::pow(r, -sp - 1.0);
    }
    row[i] = acc * h * h;
  });
  double off = 0.0;
  for (int i = 0; i < n; ++i)
    off += row[i];
  return std::pow(diag + 2.0 * off, 1.0 / p);
}

NormReport gagliardo_seminorm(const GridFunction& u, FracOrder s, double p) {
  NormReport r;
  r.kind = "gagliardo";
  r.params = {{"s", s}, {"p", p}, {"n", (double)u.grid.n}};
  r.value = gagliardo_seminorm_value(u, s, p);
  return r;
}

double holder_seminorm(const GridFunction& u, double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("holder_seminorm: beta in (0,1]");
  int n = u.grid.n;
  double h = u.grid.h();
  std::vector<double> row(n + 1, 0.0);
  detail::parallel_for(n + 1, [&](int i) {
    double best = 0.0;
    for (int j = i + 1; j <= n; ++j) {
      double d = std::abs(u.values[i] - u.values[j]);
      best = std::max(best, d / std::pow((j - i) * h, beta));
    }
    row[i] = best;
  });
  return *std::max_element(row.begin(), row.end());
}

NormReport rl_sobolev_norm(const GridFunction& u, FracOrder s, double p) {
  NormReport r;
  r.kind = "rl-sobolev";
  r.params = {{"s", s}, {"p", p}, {"n", (double)u.grid.n}};
  double a = lp_norm(u, p);
  double b = lp_norm(frac_int(u, FracOrder(1.0 - s)), p);
  double c = lp_norm(frac_deriv(u, s, DerivKind::RiemannLiouville), p);
  r.value = a + b + c;
  return r;
}

double hardy_quotient(const GridFunction& u, FracOrder s, double p) {
  double sp = (double)s * p;
  if (!(sp < 1.0))
    throw std::invalid_argument("hardy_quotient: requires sp < 1");
  const Grid& g = u.grid;
  double a = g.interval.a, b = g.interval.b, h = g.h();
  double mid = 0.5 * (a + b);
  // primitive of min(x-a, b-x)^(-sp)
  auto F = [&](double x) {
    double e = 1.0 - sp;
    if (x <= mid)
      return std::pow(x - a, e) / e;
    return 2.0 * std::pow(mid - a, e) / e - std::pow(b - x, e) / e;
  };
  double acc = 0.0;
  for (int j = 0; j <= g.n; ++j) {
    double lo = std::max(a, g.node(j) - 0.5 * h);
    double hi = std::min(b, g.node(j) + 0.5 * h);
    acc += std::pow(std::abs(u.values[j]), p) * (F(hi) - F(lo));
  }
  return acc;
}

} // namespace fraccalc
