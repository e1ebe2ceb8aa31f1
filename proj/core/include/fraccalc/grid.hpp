#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fraccalc {

struct Interval {
  double a;
  double b;

  Interval(double a_, double b_);
  double length() const { return b - a; }
};

struct Grid {
  Interval interval;
  int n; // cell count, nodes are x_j = a + j h, j = 0..n

  Grid(Interval iv, int n_);
  double h() const { return interval.length() / n; }
  double node(int j) const { return interval.a + j * h(); }
  bool operator==(const Grid& o) const {
    return interval.a == o.interval.a && interval.b == o.interval.b && n == o.n;
  }
};

// Fractional order, clamped away from the degenerate endpoints. Limits s -> 0+
// and s -> 1- are covered by the dedicated sweep operations.
struct FracOrder {
  static constexpr double eps = 1e-6;
  double s;
  FracOrder(double s_);
  operator double() const { return s; }
};

enum class EndpointPolicy { Exact, CellAveraged };

// One left-endpoint power component c (x-a)^(mu-1). Grid functions sampled
// from singular corpus members carry these so operators can treat the
// non-interpolable part in closed form.
struct SingularTerm {
  double coeff;
  double mu; // exponent parameter, mu > 0 (integrability)
};

struct GridFunction {
  Grid grid;
  std::vector<double> values; // length n+1, full function values
  EndpointPolicy policy = EndpointPolicy::CellAveraged;
  std::vector<SingularTerm> singular; // already included in `values`
  std::vector<int> flagged_nodes;     // singular / near-atom nodes
  std::vector<std::string> flags;     // free-form metadata notes

  explicit GridFunction(Grid g);
  GridFunction(Grid g, std::vector<double> vals);

  bool has_singular() const { return !singular.empty(); }
  void flag(int node, const std::string& why);

  // node values of the singular part alone, policy applied at node 0
  std::vector<double> singular_values() const;
  // values minus the singular part; this is what interpolant-based schemes see
  std::vector<double> regular_values() const;
};

// policy-consistent sample of c (x-a)^(mu-1) at node j
double singular_node_value(const Grid& g, const SingularTerm& t, int j,
                           EndpointPolicy policy);

// add c (x-a)^(mu-1) to u: nodal values plus metadata, node 0 cell-averaged
// when the term is singular there
void add_singular(GridFunction& u, const SingularTerm& t);

double eval_pw_linear(const GridFunction& u, double x);

GridFunction gf_add(const GridFunction& u, const GridFunction& v,
                    double cu = 1.0, double cv = 1.0);
GridFunction gf_scale(const GridFunction& u, double c);

// CSV with header `x,value`, >= 15 significant digits, LF endings.
void write_csv(std::ostream& os, const GridFunction& u);
void write_csv_file(const std::string& path, const GridFunction& u);

} // namespace fraccalc
