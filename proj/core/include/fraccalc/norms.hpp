#pragma once

#include "fraccalc/grid.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fraccalc {

struct NormReport {
  std::string kind;
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
  bool diverges = false; // set by ladder probes, never by single-grid values
  std::vector<std::pair<int, double>> ladder;
};

// trapezoidal L^p norm (nodal max for p = inf); singular-flagged nodes
// already hold cell averages, which is what the quadrature wants
double lp_norm(const GridFunction& u, double p);

// sup_t t L1({|u|>t})^(1/p) for the piecewise-constant surrogate of |u|
// (node values own their cells); the sup is attained at sample levels
double weak_lp_quasinorm(const GridFunction& u, double p);

// Gagliardo seminorm of the interpolant: off-diagonal cell pairs by midpoint
// rule, the diagonal band by the closed-form integral of |slope|^p |x-y|^p
// against |x-y|^(-sp-1) over each cell square
double gagliardo_seminorm_value(const GridFunction& u, FracOrder s, double p);
NormReport gagliardo_seminorm(const GridFunction& u, FracOrder s, double p);

// max over node pairs of |u(x_i)-u(x_j)|/|x_i-x_j|^beta, beta in (0,1]
double holder_seminorm(const GridFunction& u, double beta);

// ||u||_p + ||I^(1-s)[u]||_p + ||D^s_RL[u]||_p
NormReport rl_sobolev_norm(const GridFunction& u, FracOrder s, double p);

// integral of |u|^p / min(x-a, b-x)^(sp); the weight is integrated exactly
// per cell so endpoint cells need no ad-hoc treatment; requires sp < 1
double hardy_quotient(const GridFunction& u, FracOrder s, double p);

} // namespace fraccalc
