#include "fraccalc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fraccalc {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Interval: need finite a < b");
}

Grid::Grid(Interval iv, int n_) : interval(iv), n(n_) {
  if (n < 2)
    throw std::invalid_argument("Grid: need n >= 2");
}

FracOrder::FracOrder(double s_) : s(std::clamp(s_, eps, 1.0 - eps)) {
  if (!std::isfinite(s_))
    throw std::invalid_argument("FracOrder: s must be finite");
}

GridFunction::GridFunction(Grid g) : grid(g), values(g.n + 1, 0.0) {}

GridFunction::GridFunction(Grid g, std::vector<double> vals)
    : grid(g), values(std::move(vals)) {
  if ((int)values.size() != grid.n + 1)
    throw std::invalid_argument("GridFunction: values length != n+1");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("GridFunction: values must be finite");
}

void GridFunction::flag(int node, const std::string& why) {
  flagged_nodes.push_back(node);
  flags.push_back(why);
}

double singular_node_value(const Grid& g, const SingularTerm& t, int j,
                           EndpointPolicy policy) {
  double h = g.h();
  if (j == 0) {
    if (t.mu > 1.0)
      return 0.0; // continuous, vanishes at a
    if (t.mu == 1.0)
      return t.coeff;
    if (policy == EndpointPolicy::Exact)
      throw std::domain_error("singular_node_value: exact policy at a singular node");
    // average over the half cell (a, a + h/2)
    double r = 0.5 * h;
    return t.coeff * std::pow(r, t.mu - 1.0) / t.mu;
  }
  return t.coeff * std::pow(g.node(j) - g.interval.a, t.mu - 1.0);
}

std::vector<double> GridFunction::singular_values() const {
  std::vector<double> out(grid.n + 1, 0.0);
  for (const auto& t : singular)
    for (int j = 0; j <= grid.n; ++j)
      out[j] += singular_node_value(grid, t, j, policy);
  return out;
}

std::vector<double> GridFunction::regular_values() const {
  if (singular.empty())
    return values;
  std::vector<double> out = values;
  auto sv = singular_values();
  for (int j = 0; j <= grid.n; ++j)
    out[j] -= sv[j];
  return out;
}

void add_singular(GridFunction& u, const SingularTerm& t) {
  if (t.coeff == 0.0)
    return;
  u.singular.push_back(t);
  for (int j = 1; j <= u.grid.n; ++j)
    u.values[j] += singular_node_value(u.grid, t, j, u.policy);
  u.values[0] +=
      singular_node_value(u.grid, t, 0, EndpointPolicy::CellAveraged);
  if (t.mu < 1.0)
    u.flag(0, "cell-averaged");
}

double eval_pw_linear(const GridFunction& u, double x) {
  const auto& g = u.grid;
  if (x < g.interval.a || x > g.interval.b)
    throw std::domain_error("eval_pw_linear: x outside [a,b]");
  double h = g.h();
  int j = std::min((int)std::floor((x - g.interval.a) / h), g.n - 1);
  double t = (x - g.node(j)) / h;
  return (1.0 - t) * u.values[j] + t * u.values[j + 1];
}

GridFunction gf_add(const GridFunction& u, const GridFunction& v, double cu,
                    double cv) {
  if (!(u.grid == v.grid))
    throw std::invalid_argument("gf_add: mismatched grids");
  GridFunction out(u.grid);
  for (int j = 0; j <= u.grid.n; ++j)
    out.values[j] = cu * u.values[j] + cv * v.values[j];
  out.policy = u.policy;
  for (auto t : u.singular)
    out.singular.push_back({cu * t.coeff, t.mu});
  for (auto t : v.singular)
    out.singular.push_back({cv * t.coeff, t.mu});
  return out;
}

GridFunction gf_scale(const GridFunction& u, double c) {
  GridFunction out = u;
  for (auto& v : out.values)
    v *= c;
  for (auto& t : out.singular)
    t.coeff *= c;
  return out;
}

void write_csv(std::ostream& os, const GridFunction& u) {
  os << "x,value\n";
  std::ostringstream line;
  line.precision(17);
  for (int j = 0; j <= u.grid.n; ++j) {
    line.str("");
    line << u.grid.node(j) << "," << u.values[j] << "\n";
    os << line.str();
  }
}

void write_csv_file(const std::string& path, const GridFunction& u) {
  std::ofstream f(path, std::ios::binary); // binary: keep LF on any platform
  if (!f)
    throw std::runtime_error("cannot open " + path);
  write_csv(f, u);
}

} // namespace fraccalc
