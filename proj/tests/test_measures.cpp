#include <doctest.h>

#include "fraccalc/analytic.hpp"
#include "fraccalc/measures.hpp"
#include "fraccalc/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace fraccalc;

TEST_CASE("pairing with a Dirac atom evaluates the test function") {
  Grid g(Interval(0.0, 1.0), 64);
  RadonMeasure m(g);
  m.atoms.push_back({0.37, 1.0});
  GridFunction phi = sample(AnalyticFunction::linear(), g);
  CHECK(pairing(m, phi) == doctest::Approx(0.37).epsilon(1e-12));
  GridFunction hat = make_hat(g, 0.37, 0.1);
  CHECK(pairing(m, hat) == doctest::Approx(eval_pw_linear(hat, 0.37)));
}

TEST_CASE("pairing with the zero measure and with Lebesgue density") {
  Grid g(Interval(0.0, 1.0), 64);
  RadonMeasure zero(g);
  GridFunction phi = sample(AnalyticFunction::cosine(), g);
  CHECK(pairing(zero, phi) == doctest::Approx(0.0));
  RadonMeasure leb(g);
  for (double& v : leb.ac_density.values)
    v = 1.0;
  GridFunction x = sample(AnalyticFunction::linear(), g);
  CHECK(pairing(leb, x) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fractional integral of a Dirac atom is the exact kernel") {
  Grid g(Interval(0.0, 1.0), 100);
  double c = 0.33, s = 0.4;
  RadonMeasure m(g);
  m.atoms.push_back({c, 2.0});
  GridFunction v = frac_int_measure(m, FracOrder(s));
  for (int j = 0; j <= g.n; ++j) {
    double x = g.node(j);
    if (x <= c + 2.0 * g.h())
      continue; // near-atom nodes are flagged, skip them here
    double want = 2.0 * std::pow(x - c, s - 1.0) / gamma_fn(s);
    CHECK(v.values[j] == doctest::Approx(want).epsilon(1e-12));
  }
  for (int j = 0; j <= g.n; ++j)
    if (g.node(j) < c)
      CHECK(v.values[j] == 0.0);
}

TEST_CASE("fractional integral of a measure: zero and ac consistency") {
  Grid g(Interval(0.0, 1.0), 128);
  FracOrder s(0.5);
  RadonMeasure zero(g);
  for (double v : frac_int_measure(zero, s).values)
    CHECK(v == 0.0);
  // ac-only measure must agree with the grid operator on its density
  RadonMeasure m(g);
  m.ac_density = sample(AnalyticFunction::cosine(), g);
  GridFunction a = frac_int_measure(m, s);
  GridFunction b = frac_int(m.ac_density, s);
  for (int j = 0; j <= g.n; ++j)
    CHECK(std::abs(a.values[j] - b.values[j]) < 1e-10);
}

TEST_CASE("BV evaluation and total variation") {
  Grid g(Interval(0.0, 1.0), 128);
  BVFunction u(g);
  u.u_a_plus = 0.5;
  u.jumps = {{0.3, -1.0}, {0.7, 2.0}};
  for (double& v : u.ac_slope.values)
    v = 1.0;
  CHECK(u.eval(0.1) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(u.eval(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(u.eval(0.9) == doctest::Approx(2.4).epsilon(1e-12));
  CHECK(u.total_variation() == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("derivative measure of a pure jump function") {
  Grid g(Interval(0.0, 1.0), 64);
  BVFunction u(g);
  u.jumps = {{0.5, 3.0}};
  RadonMeasure du = derivative_measure(u);
  REQUIRE(du.atoms.size() == 1);
  CHECK(du.atoms[0].t == doctest::Approx(0.5));
  CHECK(du.atoms[0].w == doctest::Approx(3.0));
  CHECK(du.total_variation() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("distributional derivative of a unit jump") {
  // D^s of the step at c has density (x-c)^(-s)/Gamma(1-s) past the jump
  Grid g(Interval(0.0, 1.0), 256);
  double c = 0.5, s = 0.4;
  BVFunction u(g);
  u.jumps = {{c, 1.0}};
  RadonMeasure d = distributional_frac_deriv(u, FracOrder(s), g);
  CHECK(d.atoms.empty());
  for (int j = 0; j <= g.n; ++j) {
    double x = g.node(j);
    if (x <= c + 2.0 * g.h())
      continue;
    double want = std::pow(x - c, -s) / gamma_fn(1.0 - s);
    CHECK(d.ac_density.values[j] == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("distributional derivative of a constant") {
  Grid g(Interval(0.0, 1.0), 256);
  double s = 0.3, cval = 2.0;
  BVFunction u(g);
  u.u_a_plus = cval;
  RadonMeasure d = distributional_frac_deriv(u, FracOrder(s), g);
  CHECK(d.atoms.empty());
  for (int j = 1; j <= g.n; ++j) {
    double x = g.node(j);
    double want = cval * std::pow(x, -s) / gamma_fn(1.0 - s);
    CHECK(d.ac_density.values[j] == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("stage-m Cantor function values") {
  for (int m : {2, 4, 6}) {
    CHECK(cantor_fn(0.0, m) == doctest::Approx(0.0));
    CHECK(cantor_fn(1.0, m) == doctest::Approx(1.0));
    CHECK(cantor_fn(0.5, m) == doctest::Approx(0.5));
    CHECK(cantor_fn(1.0 / 3.0, m) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cantor_fn(2.0 / 3.0, m) == doctest::Approx(0.5).epsilon(1e-12));
    // monotone
    double prev = 0.0;
    for (double y = 0.0; y <= 1.0; y += 1.0 / 729.0) {
      CHECK(cantor_fn(y, m) >= prev - 1e-14);
      prev = cantor_fn(y, m);
    }
  }
}

TEST_CASE("atom detection: zero input and smooth input find no atoms") {
  Interval iv(0.0, 1.0);
  FracOrder s(0.5);
  std::vector<GridFunction> zeros, cosines;
  for (int n : {128, 256, 512}) {
    Grid g(iv, n);
    zeros.push_back(GridFunction(g));
    cosines.push_back(sample(AnalyticFunction::cosine(), g));
  }
  RadonMeasure mz = detect_atoms(zeros, s);
  CHECK(mz.atoms.empty());
  CHECK(mz.total_variation() == doctest::Approx(0.0).epsilon(1e-10));
  RadonMeasure mc = detect_atoms(cosines, s);
  CHECK(mc.atoms.empty());
}

TEST_CASE("atom detection validates the ladder") {
  Interval iv(0.0, 1.0);
  std::vector<GridFunction> two = {GridFunction(Grid(iv, 128)),
                                   GridFunction(Grid(iv, 256))};
  CHECK_THROWS_AS(detect_atoms(two, FracOrder(0.5)), std::invalid_argument);
  std::vector<GridFunction> bad = {GridFunction(Grid(iv, 128)),
                                   GridFunction(Grid(Interval(0.0, 2.0), 256)),
                                   GridFunction(Grid(iv, 512))};
  CHECK_THROWS_AS(detect_atoms(bad, FracOrder(0.5)), std::invalid_argument);
}

TEST_CASE("pw-linear against power moments") {
  // int_t0^b phi (x-t0)^e for constant phi = 1: (b-t0)^(e+1)/(e+1)
  Grid g(Interval(0.0, 1.0), 64);
  GridFunction one = sample(AnalyticFunction::constant(1.0), g);
  double t0 = 0.25, e = -0.5;
  CHECK(pair_pw_linear_power(one, t0, e) ==
        doctest::Approx(std::pow(0.75, 0.5) / 0.5).epsilon(1e-12));
  GridFunction x = sample(AnalyticFunction::linear(), g);
  // int_0^1 x (x)^(-1/2) dx = 2/3
  CHECK(pair_pw_linear_power(x, 0.0, -0.5) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}
