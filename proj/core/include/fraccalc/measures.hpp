#pragma once

#include "fraccalc/analytic.hpp"
#include "fraccalc/frac_integral.hpp"
#include "fraccalc/grid.hpp"
#include "fraccalc/report.hpp"

#include <string>
#include <vector>

namespace fraccalc {

struct Atom {
  double t; // location, strictly inside (a,b)
  double w;
};

// mu = ac_density L1 + sum of atoms. Cantor parts appear only through their
// stage-m absolutely continuous approximations.
struct RadonMeasure {
  GridFunction ac_density;
  std::vector<Atom> atoms;
  std::string label;

  explicit RadonMeasure(Grid g) : ac_density(g) {}
  double total_variation() const;
};

// structured BV datum u = u(a+) + (ac primitive) + (jump part) + (Cantor part)
struct BVFunction {
  double u_a_plus = 0.0;
  std::vector<Atom> jumps;   // (location, jump size)
  GridFunction ac_slope;     // density of (Du)_ac
  int cantor_stage = 0;      // 0 = no Cantor component
  double cantor_coeff = 0.0; // total mass of the Cantor component
  std::string label;

  explicit BVFunction(Grid g) : ac_slope(g) {}
  const Interval& interval() const { return ac_slope.grid.interval; }
  // pointwise value; jumps enter for x > location
  double eval(double x) const;
  double total_variation() const;
};

GridFunction sample_bv(const BVFunction& u, const Grid& grid);

// Du as a measure: ac part = ac_slope with the stage-m Cantor derivative
// folded in (exact cell averages of the self-similar density), atoms = jumps
RadonMeasure derivative_measure(const BVFunction& u);

// integral of phi d(mu) for the pw-linear phi
double pairing(const RadonMeasure& m, const GridFunction& phi);

// I^s of a measure: product integration of the ac density plus the exact
// kernels w (x-t)^(s-1)/Gamma(s) of the atoms. Nodes within h/2 of an atom
// are flagged `near-atom`; a node colliding with an atom is skipped and
// flagged.
GridFunction frac_int_measure(const RadonMeasure& m, FracOrder s);

// density of the distributional derivative D^s[u] per the BV representation
// formula: I^(1-s)[Du] + u(a+)(x-a)^(-s)/Gamma(1-s); absolutely continuous
// for BV inputs, so the atom list is empty
RadonMeasure distributional_frac_deriv(const BVFunction& u, FracOrder s,
                                       const Grid& grid);

// Scans increments of v = I^(1-s)[u] across a ladder of >= 3 refinements.
// Window increments (+-2h per level) that survive refinement (consecutive
// ratio >= 0.8) are atoms; the weight is the window-size Richardson
// extrapolation at the finest level. Everything else is differenced into an
// ac density on the finest grid.
RadonMeasure detect_atoms(const std::vector<GridFunction>& u_levels,
                          FracOrder s);

// max over the panel of |pairing(m, phi) + integral of v phi'| with
// v = I^(1-s)[u] at the finest level; the detector's reconstruction figure
double reconstruction_gap(const RadonMeasure& m, const GridFunction& v,
                          const std::vector<GridFunction>& hat_panel);

std::vector<GridFunction> default_hat_panel(const Grid& grid);

// one (s, phi) entry of the weak-* sweep, for CSV export
struct SweepRow {
  double s;
  int phi_index;
  double pairing;
  double target;
  double gap;
};

// weak-* limit D^s[u] L1 -> Du + u(a+) delta_a: pairing gaps per s, grids
// scaled so h <= (1-s)^2 (b-a) (capped at n = 65536); singular kernel pieces
// are paired with the pw-linear test functions by exact moments
VerificationReport sweep_s_to_1(const BVFunction& u,
                                const std::vector<GridFunction>& phi_panel,
                                const std::vector<double>& s_list,
                                std::vector<SweepRow>* rows = nullptr);

// ||u||_{W^{s,1}_RL} <= max{1 + (b-a)^(-s)/Gamma(2-s),
//                           2 (b-a)^(1-s)/Gamma(2-s)} ||u||_BV
VerificationReport check_bv_embedding(const BVFunction& u, FracOrder s,
                                      int n);

// exact integral of phi(x) (x - t0)^e over (t0, b), phi pw-linear
double pair_pw_linear_power(const GridFunction& phi, double t0, double e);

// integral of the product of two pw-linear functions on the same grid
// (Simpson per cell, exact for the quadratic integrand)
double integrate_product(const GridFunction& f, const GridFunction& g);

// integral of w * phi where w may carry singular power components: the
// regular part by integrate_product, the powers by exact moments
double integrate_against(const GridFunction& w, const GridFunction& phi);

} // namespace fraccalc
