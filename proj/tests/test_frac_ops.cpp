#include <doctest.h>

#include "fraccalc/analytic.hpp"
#include "fraccalc/frac_derivative.hpp"
#include "fraccalc/frac_integral.hpp"
#include "fraccalc/special.hpp"

#include <cmath>
#include <stdexcept>

using namespace fraccalc;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("half integral of 1 is 2 sqrt(x/pi)") {
  Interval iv(0.0, 1.0);
  Grid g(iv, 256);
  GridFunction u = sample(AnalyticFunction::constant(1.0), g);
  GridFunction v = frac_int(u, FracOrder(0.5));
  for (int j = 0; j <= g.n; ++j) {
    double x = g.node(j);
    CHECK(v.values[j] ==
          doctest::Approx(2.0 * std::sqrt(x / kPi)).epsilon(1e-12));
  }
}

TEST_CASE("power rule via the adaptive oracle") {
  // I^s[(x-a)^(mu-1)] = Gamma(mu)/Gamma(mu+s) (x-a)^(mu+s-1)
  Interval iv(0.0, 1.0);
  const double cases[3][2] = {{1.0, 0.5}, {2.0, 0.3}, {1.5, 0.7}};
  for (auto& c : cases) {
    double mu = c[0], s = c[1];
    AnalyticFunction f = AnalyticFunction::power_law(mu);
    double coeff = gamma_fn(mu) / gamma_fn(mu + s);
    for (double x : {0.2, 0.5, 0.9}) {
      double got = frac_int_oracle(f, FracOrder(s), Side::LeftAPlus, x, iv);
      double want = coeff * std::pow(x, mu + s - 1.0);
      CHECK(std::abs(got - want) < 1e-9);
    }
  }
}

TEST_CASE("power rule on the grid, relative interior error") {
  Interval iv(0.0, 1.0);
  const double cases[3][2] = {{1.0, 0.5}, {2.0, 0.3}, {1.5, 0.7}};
  for (auto& c : cases) {
    double mu = c[0], s = c[1];
    Grid g(iv, 2048);
    GridFunction u = sample(AnalyticFunction::power_law(mu), g);
    GridFunction v = frac_int(u, FracOrder(s));
    double coeff = gamma_fn(mu) / gamma_fn(mu + s);
    double worst = 0.0;
    for (int j = 0; j <= g.n; ++j) {
      double x = g.node(j);
      if (x < 0.05)
        continue;
      double want = coeff * std::pow(x, mu + s - 1.0);
      worst = std::max(worst, std::abs(v.values[j] - want) / std::abs(want));
    }
    CHECK(worst < 1e-3);
  }
}

TEST_CASE("singular power inputs use the exact rule") {
  // I^s maps c (x-a)^(mu-1) metadata to c Gamma(mu)/Gamma(mu+s) at mu+s
  Interval iv(0.0, 1.0);
  Grid g(iv, 64);
  double mu = 0.5, s = 0.3;
  GridFunction u(g);
  add_singular(u, {1.0, mu});
  GridFunction v = frac_int(u, FracOrder(s));
  REQUIRE(v.has_singular());
  double coeff = gamma_fn(mu) / gamma_fn(mu + s);
  for (int j = 1; j <= g.n; ++j) {
    double x = g.node(j);
    CHECK(v.values[j] ==
          doctest::Approx(coeff * std::pow(x, mu + s - 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("linearity and positivity") {
  Interval iv(0.0, 1.0);
  Grid g(iv, 128);
  FracOrder s(0.4);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  GridFunction v = sample(AnalyticFunction::linear(), g);
  GridFunction lhs = frac_int(gf_add(u, v, 2.0, -3.0), s);
  GridFunction rhs = gf_add(frac_int(u, s), frac_int(v, s), 2.0, -3.0);
  for (int j = 0; j <= g.n; ++j)
    CHECK(lhs.values[j] == doctest::Approx(rhs.values[j]).epsilon(1e-12));
  GridFunction w = frac_int(sample(AnalyticFunction::constant(2.0), g), s);
  for (int j = 1; j <= g.n; ++j)
    CHECK(w.values[j] > 0.0);
  CHECK(w.values[0] == 0.0);
}

TEST_CASE("reflection maps left to right") {
  Interval iv(0.0, 1.0);
  Grid g(iv, 200);
  FracOrder s(0.6);
  GridFunction u = sample(AnalyticFunction::sine(), g);
  GridFunction left = frac_int(u, s, Side::LeftAPlus);
  GridFunction right = frac_int(reflect(u), s, Side::RightBMinus);
  for (int j = 0; j <= g.n; ++j)
    CHECK(left.values[j] ==
          doctest::Approx(right.values[g.n - j]).epsilon(1e-12));
}

TEST_CASE("Riemann-Liouville equals Caputo plus the boundary term") {
  Interval iv(0.0, 1.0);
  Grid g(iv, 256);
  FracOrder s(0.5);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  double u0 = u.values[0];
  GridFunction rl = frac_deriv(u, s, DerivKind::RiemannLiouville);
  GridFunction cap = frac_deriv(u, s, DerivKind::Caputo);
  for (int j = 1; j <= g.n; ++j) {
    double x = g.node(j);
    double bd = u0 * std::pow(x, -s.s) / gamma_fn(1.0 - s);
    CHECK(std::abs(rl.values[j] - cap.values[j] - bd) < 1e-10);
  }
}

TEST_CASE("Caputo annihilates constants, Marchaud matches RL") {
  Interval iv(0.0, 1.0);
  Grid g(iv, 128);
  FracOrder s(0.35);
  GridFunction c = sample(AnalyticFunction::constant(5.0), g);
  GridFunction dc = frac_deriv(c, s, DerivKind::Caputo);
  for (double v : dc.values)
    CHECK(v == 0.0);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  GridFunction rl = frac_deriv(u, s, DerivKind::RiemannLiouville);
  GridFunction ma = frac_deriv(u, s, DerivKind::Marchaud);
  for (int j = 1; j <= g.n; ++j)
    CHECK(std::abs(rl.values[j] - ma.values[j]) < 1e-8);
}

TEST_CASE("Caputo rejects non-integrable derivative data") {
  Grid g(Interval(0.0, 1.0), 64);
  GridFunction u(g);
  add_singular(u, {1.0, 0.5});
  CHECK_THROWS_AS(frac_deriv(u, FracOrder(0.3), DerivKind::Caputo),
                  std::domain_error);
}

TEST_CASE("fractional derivative power rule kills the critical exponent") {
  // D^s[(x-a)^(s-1)] has coefficient Gamma(s) rgamma(0) = 0
  Interval iv(0.0, 1.0);
  Grid g(iv, 512);
  double s = 0.5;
  GridFunction u = sample(AnalyticFunction::critical_power(s), g);
  REQUIRE(u.has_singular());
  GridFunction d = frac_deriv(u, FracOrder(s), DerivKind::RiemannLiouville);
  for (int j = 1; j <= g.n; ++j)
    CHECK(std::abs(d.values[j]) < 1e-12);
}

TEST_CASE("smooth data: second order convergence of the product rule") {
  Interval iv(0.0, 1.0);
  FracOrder s(0.5);
  std::vector<double> errs;
  for (int n : {64, 128, 256}) {
    Grid g(iv, n);
    GridFunction u = sample(AnalyticFunction::cosine(), g,
                            EndpointPolicy::Exact);
    GridFunction v = frac_int(u, s);
    double worst = 0.0;
    for (int j = 1; j < g.n; ++j) {
      double x = g.node(j);
      double want = frac_int_oracle(AnalyticFunction::cosine(), s,
                                    Side::LeftAPlus, x, iv);
      worst = std::max(worst, std::abs(v.values[j] - want));
    }
    errs.push_back(worst);
  }
  CHECK(errs[1] < 0.35 * errs[0]);
  CHECK(errs[2] < 0.35 * errs[1]);
}

TEST_CASE("higher order representation constants") {
  CHECK(higher_rep_constant(2, 2, 1.5) == doctest::Approx(1.0));
  CHECK(higher_rep_constant(0, 2, 1.5) ==
        doctest::Approx(gamma_fn(2.0 - 1.5) / gamma_fn(4.0 - 1.5))
            .epsilon(1e-13));
  CHECK(higher_rep_constant(1, 2, 1.2) ==
        doctest::Approx(gamma_fn(0.8) / gamma_fn(1.8)).epsilon(1e-13));
}
